#pragma once

#include "knotopt/curve.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace knotopt {

struct CurveCatalogEntry {
    std::string name;
    Curve curve;
    bool concave = false;
    double a = 0.0;
    double b = 0.0;
};

/// Ordered list of named curves with their intervals of interest.
class CurveCatalog {
public:
    CurveCatalog() = default;
    /// Validates a < b and unique names; throws std::invalid_argument.
    explicit CurveCatalog(std::vector<CurveCatalogEntry> entries);

    const std::vector<CurveCatalogEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Throws std::out_of_range for unknown names.
    const CurveCatalogEntry& at(const std::string& name) const;
    bool contains(const std::string& name) const;

private:
    std::vector<CurveCatalogEntry> entries_;
};

/// Parses the catalog CSV: a header line
///   name,type,v1,v2,s,d1,d2,concave,a,b
/// followed by one row per curve.  `s` is "-" for Arctan rows, `concave` is
/// Y or N.  Blank lines and lines starting with '#' are skipped.
CurveCatalog parse_catalog(std::istream& in);
CurveCatalog load_catalog(const std::filesystem::path& path);

/// The twenty experiment curves, compiled in.
CurveCatalog default_catalog();

}  // namespace knotopt
