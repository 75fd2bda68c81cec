#include "liexp/cocycle.hpp"
#include "liexp/version.hpp"

#include <sstream>

namespace liexp {

namespace {

nlohmann::json tool_header() {
    nlohmann::json j;
    j["name"] = kToolName;
    j["version"] = kToolVersion;
    return j;
}

nlohmann::json exponent_list(const std::vector<InfExponent>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs)
        arr.push_back(x.to_json());
    return arr;
}

void print_exponent_entries(std::ostringstream& os, const InfExponent& xi, const std::string& indent) {
    const auto& names = xi.algebra().names();
    bool any = false;
    for (int i = 0; i < xi.dim(); ++i)
        for (int j = i + 1; j < xi.dim(); ++j) {
            MultiPoly e = xi.entry(i, j);
            if (e.is_zero())
                continue;
            os << indent << "Xi(" << names[i] << "," << names[j] << ") = " << e.str() << "\n";
            any = true;
        }
    if (!any)
        os << indent << "0\n";
}

} // namespace

nlohmann::json CocycleClassification::to_json() const {
    nlohmann::json j;
    j["tool"] = tool_header();
    nlohmann::json alg;
    alg["label"] = algebra.label();
    alg["dim"] = algebra.dim();
    alg["fingerprint"] = algebra.fingerprint();
    j["algebra"] = std::move(alg);
    j["degree_bound"] = degree_bound;
    j["stable"] = stable;
    j["multiple_time_generators"] = multiple_time_generators;
    nlohmann::json dims;
    dims["solutions"] = solution_dim;
    dims["coboundaries"] = coboundary_dim;
    dims["classes"] = class_dim;
    j["dimensions"] = std::move(dims);
    j["parameters"] = parameter_names;
    j["solution_basis"] = exponent_list(solution_basis);
    j["coboundary_basis"] = exponent_list(coboundary_basis);
    j["class_basis"] = exponent_list(class_basis);
    return j;
}

std::string CocycleClassification::to_text() const {
    std::ostringstream os;
    os << "algebra: " << algebra.label() << " (dim " << algebra.dim() << ")\n";
    os << "fingerprint: " << algebra.fingerprint() << "\n";
    os << "degree bound: " << degree_bound << "\n";
    os << "stable at degree " << degree_bound + 1 << ": " << (stable ? "yes" : "no") << "\n";
    if (multiple_time_generators)
        os << "warning: several generators act on time; the classification on this input is\n"
           << "         outside the single-time-translation assumption and is reported as-is\n";
    if (!stable)
        os << "warning: inconclusive at degree " << degree_bound
           << " (raising the bound changes the class count)\n";
    os << "solution dimension: " << solution_dim << "\n";
    os << "coboundary dimension: " << coboundary_dim << "\n";
    os << "classes: " << class_dim << "\n";
    os << "class basis (a choice of representatives):\n";
    for (size_t i = 0; i < class_basis.size(); ++i) {
        os << "  " << parameter_names[i] << ":\n";
        print_exponent_entries(os, class_basis[i], "    ");
    }
    return os.str();
}

nlohmann::json PTable::to_json() const {
    nlohmann::json j;
    j["tool"] = tool_header();
    j["m"] = m;
    j["constants"] = constants;
    nlohmann::json entries = nlohmann::json::array();
    for (int l = 0; l <= m; ++l)
        for (int n = l + 1; n <= m; ++n) {
            nlohmann::json e;
            e["l"] = l;
            e["n"] = n;
            e["poly"] = p[l][n].to_json();
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    return j;
}

std::string PTable::to_text() const {
    std::ostringstream os;
    os << "acceleration cocycle table, m = " << m << "\n";
    os << "constants:";
    for (const auto& c : constants)
        os << " " << c;
    os << "\n";
    for (int l = 0; l <= m; ++l)
        for (int n = l + 1; n <= m; ++n)
            os << "P(" << l << "," << n << ") = " << p[l][n].str() << "\n";
    return os.str();
}

} // namespace liexp
