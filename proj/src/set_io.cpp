#include "switchsim/set_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace switchsim {

namespace {

using nlohmann::ordered_json;

ordered_json complex_to_json(const Complex& c) {
    return ordered_json::array({c.real(), c.imag()});
}

Complex complex_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("set json: complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json unitary_to_json(const Unitary& u, bool as_dense) {
    ordered_json out;
    if (!as_dense) {
        const auto& m = std::get<MonomialUnitary>(u);
        out["perm"] = m.perm;
        ordered_json phases = ordered_json::array();
        for (const auto& p : m.phases) phases.push_back(complex_to_json(p));
        out["phases"] = std::move(phases);
    } else {
        const DenseMatrix m = unitary_to_dense(u);
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < m.dim; ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < m.dim; ++c) row.push_back(complex_to_json(m.at(r, c)));
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
    }
    return out;
}

Unitary unitary_from_json(const ordered_json& j, bool as_dense, std::size_t dim) {
    if (!as_dense) {
        std::vector<std::size_t> perm = j.at("perm").get<std::vector<std::size_t>>();
        const auto& phases_json = j.at("phases");
        std::vector<Complex> phases;
        phases.reserve(phases_json.size());
        for (const auto& p : phases_json) phases.push_back(complex_from_json(p));
        if (perm.size() != dim || phases.size() != dim)
            throw std::invalid_argument("set json: monomial operator size != d");
        return MonomialUnitary(std::move(perm), std::move(phases));
    }
    const auto& rows = j.at("rows");
    if (rows.size() != dim) throw std::invalid_argument("set json: dense operator size != d");
    DenseMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (rows[r].size() != dim)
            throw std::invalid_argument("set json: dense operator row size != d");
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = complex_from_json(rows[r][c]);
    }
    return m;
}

}  // namespace

std::string set_to_json(const UnitarySet& set) {
    check_set_invariants(set);
    const bool as_dense = !set.monomial();
    ordered_json out;
    out["n"] = set.n;
    out["d"] = set.dim;
    out["representation"] = as_dense ? "dense" : "monomial";
    ordered_json unitaries = ordered_json::array();
    for (const auto& u : set.unitaries) unitaries.push_back(unitary_to_json(u, as_dense));
    out["unitaries"] = std::move(unitaries);
    out["claimed_y"] = set.claimed_y ? ordered_json(*set.claimed_y) : ordered_json(nullptr);
    out["omega_power"] = set.omega_power ? ordered_json(*set.omega_power) : ordered_json(nullptr);
    return out.dump(2);
}

UnitarySet set_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("set json: parse failure: ") + e.what());
    }
    UnitarySet set;
    try {
        set.n = j.at("n").get<std::size_t>();
        set.dim = j.at("d").get<std::size_t>();
        const std::string representation = j.at("representation").get<std::string>();
        if (representation != "monomial" && representation != "dense")
            throw std::invalid_argument("set json: representation must be monomial or dense");
        const bool as_dense = representation == "dense";
        const auto& unitaries = j.at("unitaries");
        if (unitaries.size() != set.n)
            throw std::invalid_argument("set json: unitary count != n");
        for (const auto& u : unitaries)
            set.unitaries.push_back(unitary_from_json(u, as_dense, set.dim));
        if (j.contains("claimed_y") && !j["claimed_y"].is_null())
            set.claimed_y = j["claimed_y"].get<std::uint64_t>();
        if (j.contains("omega_power") && !j["omega_power"].is_null())
            set.omega_power = j["omega_power"].get<std::uint64_t>();
    } catch (const ordered_json::exception& e) {
        // missing keys / wrong value types are caller errors, same as unparseable text
        throw std::invalid_argument(std::string("set json: malformed document: ") + e.what());
    }
    check_set_invariants(set);
    if (set.claimed_y && *set.claimed_y >= factorial(set.n))
        throw std::invalid_argument("set json: claimed_y out of range");
    return set;
}

UnitarySet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("set json: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return set_from_json(buffer.str());
}

void save_set_file(const UnitarySet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("set json: cannot open " + path + " for writing");
    out << set_to_json(set) << '\n';
}

}  // namespace switchsim
