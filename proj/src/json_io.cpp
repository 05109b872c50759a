#include "nctori/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nctori::json_io {

namespace {

long long checked_ll(const Int &v, const char *what) {
    if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value too large");
    return v.get_si();
}

std::size_t dim_from(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0)
        throw std::invalid_argument(std::string("matrix json: bad '") + key + "'");
    return j[key].get<std::size_t>();
}

} // namespace

json to_json(const IntMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const RatMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix int_matrix_from_json(const json &j) {
    const std::size_t rows = dim_from(j, "rows"), cols = dim_from(j, "cols");
    const json &entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix json: entry rows mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json &row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix json: entry cols mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string s = row[c].get<std::string>();
            if (s.find('/') != std::string::npos)
                throw std::invalid_argument("matrix json: rational entry in integer matrix");
            m.at(i, c) = parse_int(s);
        }
    }
    return m;
}

RatMatrix rat_matrix_from_json(const json &j) {
    const std::size_t rows = dim_from(j, "rows"), cols = dim_from(j, "cols");
    const json &entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix json: entry rows mismatch");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json &row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix json: entry cols mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = parse_rat(row[c].get<std::string>());
    }
    return m;
}

json to_json(const IntPoly &p) {
    json coeffs = json::array();
    for (const auto &c : p.coeffs()) coeffs.push_back(to_string(c));
    return json{{"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const json &j) {
    const json &coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw std::invalid_argument("poly json: 'coeffs' must be an array");
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto &e : coeffs) c.push_back(parse_int(e.get<std::string>()));
    return IntPoly(std::move(c));
}

json to_json(const ParamScalar &s) {
    json coeffs = json::object();
    for (const auto &[name, c] : s.coeffs()) coeffs[name] = to_string(c);
    return json{{"const", to_string(s.const_part())}, {"coeffs", std::move(coeffs)}};
}

ParamScalar param_scalar_from_json(const json &j) {
    ParamScalar s(parse_rat(j.at("const").get<std::string>()));
    if (j.contains("coeffs"))
        for (const auto &[name, c] : j.at("coeffs").items())
            s += ParamScalar::parameter(name, parse_rat(c.get<std::string>()));
    return s;
}

json to_json(const ParamMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ParamMatrix param_matrix_from_json(const json &j) {
    const std::size_t rows = dim_from(j, "rows"), cols = dim_from(j, "cols");
    const json &entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix json: entry rows mismatch");
    ParamMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json &row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix json: entry cols mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = param_scalar_from_json(row[c]);
    }
    return m;
}

json to_json(const forms::SkewFormSpace &space) {
    json basis = json::array();
    for (const auto &b : space.basis) basis.push_back(to_json(b));
    return json{{"dim", space.dim_ambient},
                {"dimension", space.dimension()},
                {"parameters", space.parameters},
                {"basis", std::move(basis)}};
}

json to_json(const simplicity::DegeneracyVerdict &verdict) {
    json witness;
    if (verdict.witness) {
        witness = json::array();
        for (const auto &e : *verdict.witness) witness.push_back(checked_ll(e, "witness"));
    } else {
        witness = nullptr;
    }
    return json{{"nondegenerate", verdict.nondegenerate}, {"witness", std::move(witness)}};
}

json to_json(const ktheory::KReport &report) {
    json ranks = json::array();
    for (const auto &[l, rk] : report.per_degree_ranks) ranks.push_back(json::array({l, rk}));
    json closed_form;
    if (report.prime_closed_form)
        closed_form = checked_ll(*report.prime_closed_form, "prime_closed_form");
    else
        closed_form = nullptr;
    return json{{"n", report.n},
                {"d", report.d},
                {"per_degree_ranks", std::move(ranks)},
                {"s1", report.s1},
                {"s0", report.s0},
                {"af", report.af ? "AF" : "NOT_AF"},
                {"prime_closed_form", std::move(closed_form)},
                {"free_outside_origin", report.free_outside_origin},
                {"kernel_checked_degrees", report.kernel_checked_degrees}};
}

json to_json(const ktheory::PartitionCertificate &cert) {
    return json{{"I", cert.set_i}, {"J", cert.set_j}};
}

json to_json(const weyl::NormalWord &word) {
    json powers = json::array();
    for (const auto &p : word.powers) powers.push_back(checked_ll(p, "powers"));
    return json{{"phase", to_json(word.phase.exponent())},
                {"powers", std::move(powers)},
                {"text", word.str()}};
}

weyl::NormalWord normal_word_from_json(const json &j) {
    weyl::NormalWord word;
    word.phase = weyl::PhaseExponent(param_scalar_from_json(j.at("phase")));
    for (const auto &p : j.at("powers")) word.powers.emplace_back(static_cast<long>(p.get<long long>()));
    return word;
}

std::string dump_with_schema(json j) {
    json out = json::object();
    out["schema"] = kSchemaVersion;
    for (auto &[key, value] : j.items()) out[key] = value;
    return out.dump(2) + "\n";
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

} // namespace nctori::json_io
