#include "knotopt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace knotopt {

namespace {

constexpr const char* kDefaultCatalogCsv = R"(name,type,v1,v2,s,d1,d2,concave,a,b
logistic1a,Logistic,0.0,1.0,1.0,-1.0,0.0,Y,0.0,2.0
logistic2a,Logistic,0.0,1.2,1.0,-1.5,0.0,Y,0.0,2.0
logistic3a,Logistic,0.0,1.2,1.0,-1.5,0.0,Y,0.25,1.75
gompertz1a,Gompertz,0.0,1.0,-1.0,-1.0,0.0,Y,0.0,6.0
weibull1a,Weibull,1.0,-1.0,2.0,1.0,0.0,Y,-2.0,-0.5
weibull2a,Weibull,1.0,-1.0,4.0,1.0,0.0,Y,1.0,3.0
weibull3a,Weibull,1.0,-1.0,2.2,1.0,0.0,Y,1.0,3.0
logistic1b,Logistic,0.0,1.0,1.0,-1.0,0.0,N,-2.0,2.0
logistic2b,Logistic,0.0,1.2,1.0,-1.5,0.0,N,-2.0,2.0
logistic3b,Logistic,0.0,1.2,1.0,-1.5,0.0,N,-1.75,1.75
gompertz1b,Gompertz,0.0,1.0,-1.0,-1.0,0.0,N,-3.0,6.0
gompertz2b,Gompertz,0.0,2.0,-0.5,0.5,0.0,N,-6.0,6.0
gompertz3b,Gompertz,0.0,2.0,-3.0,0.5,0.0,N,-6.0,6.0
weibull1b,Weibull,1.0,-1.0,2.0,1.0,0.0,N,-2.0,2.0
weibull2b,Weibull,1.0,-1.0,4.0,1.0,0.0,N,-2.0,2.0
arctan1b,Arctan,0.0,1.0,-,1.0,0.0,N,-6.0,6.0
arctan2b,Arctan,0.0,1.0,-,0.5,0.5,N,-6.0,6.0
arctan3b,Arctan,0.0,-4.0,-,0.5,0.0,N,-6.0,6.0
algebraic1b,Algebraic,1.0,2.0,2.0,1.5,2.0,N,-2.0,4.0
algebraic2b,Algebraic,2.0,2.0,2.0,1.5,2.0,N,-4.0,2.0
)";

std::string trim(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_real(const std::string& text, int line_no, const char* column)
{
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        std::ostringstream msg;
        msg << "catalog line " << line_no << ": column '" << column << "' is not a number: '"
            << text << "'";
        throw std::invalid_argument(msg.str());
    }
    return value;
}

}  // namespace

CurveCatalog::CurveCatalog(std::vector<CurveCatalogEntry> entries) : entries_(std::move(entries))
{
    std::unordered_set<std::string> seen;
    for (const auto& e : entries_) {
        if (e.name.empty()) throw std::invalid_argument("catalog: empty curve name");
        if (!seen.insert(e.name).second)
            throw std::invalid_argument("catalog: duplicate curve name '" + e.name + "'");
        if (!(e.a < e.b))
            throw std::invalid_argument("catalog: curve '" + e.name + "' needs a < b");
    }
}

const CurveCatalogEntry& CurveCatalog::at(const std::string& name) const
{
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const CurveCatalogEntry& e) { return e.name == name; });
    if (it == entries_.end()) throw std::out_of_range("unknown curve '" + name + "'");
    return *it;
}

bool CurveCatalog::contains(const std::string& name) const
{
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const CurveCatalogEntry& e) { return e.name == name; });
}

CurveCatalog parse_catalog(std::istream& in)
{
    static const std::vector<std::string> kHeader = {"name", "type",    "v1", "v2", "s",
                                                     "d1",   "d2",      "concave", "a", "b"};
    std::vector<CurveCatalogEntry> entries;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto fields = split_fields(t);
        if (!header_seen) {
            std::vector<std::string> lowered;
            for (auto f : fields) {
                std::transform(f.begin(), f.end(), f.begin(),
                               [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
                lowered.push_back(f);
            }
            if (lowered != kHeader)
                throw std::invalid_argument(
                    "catalog: header must be name,type,v1,v2,s,d1,d2,concave,a,b");
            header_seen = true;
            continue;
        }
        if (fields.size() != kHeader.size()) {
            std::ostringstream msg;
            msg << "catalog line " << line_no << ": expected 10 columns, got " << fields.size();
            throw std::invalid_argument(msg.str());
        }
        const CurveFamily family = parse_family(fields[1]);
        std::optional<double> s;
        if (fields[4] != "-" && !fields[4].empty()) s = parse_real(fields[4], line_no, "s");
        const std::string& cc = fields[7];
        bool concave = false;
        if (cc == "Y" || cc == "y") concave = true;
        else if (cc != "N" && cc != "n")
            throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                        ": concave must be Y or N");
        entries.push_back(CurveCatalogEntry{
            fields[0],
            Curve(family, parse_real(fields[2], line_no, "v1"), parse_real(fields[3], line_no, "v2"),
                  s, parse_real(fields[5], line_no, "d1"), parse_real(fields[6], line_no, "d2")),
            concave, parse_real(fields[8], line_no, "a"), parse_real(fields[9], line_no, "b")});
    }
    if (!header_seen) throw std::invalid_argument("catalog: empty input");
    return CurveCatalog(std::move(entries));
}

CurveCatalog load_catalog(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file '" + path.string() + "'");
    return parse_catalog(in);
}

CurveCatalog default_catalog()
{
    std::istringstream in(kDefaultCatalogCsv);
    return parse_catalog(in);
}

}  // namespace knotopt
