#pragma once

#include "knotopt/catalog.hpp"

/// One catalog for the whole test binary; references into it stay valid.
inline const knotopt::CurveCatalog& test_catalog()
{
    static const knotopt::CurveCatalog catalog = knotopt::default_catalog();
    return catalog;
}
