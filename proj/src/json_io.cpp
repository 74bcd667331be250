#include "cyclequiv/json_io.hpp"

#include <fstream>

namespace cyclequiv::jsonio {

using nlohmann::json;

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    if (j.is_number_integer()) return Field::from_order(j.get<long>());
    if (!j.is_object() || !j.contains("p"))
        throw Error(ErrorCode::InvalidInput, "field spec must be an integer order or {p,k,modulus}");
    long p = j.at("p").get<long>();
    int k = j.value("k", 1);
    if (j.contains("modulus")) return Field::make(p, k, j.at("modulus").get<std::vector<long>>());
    return Field::make(p, k);
}

json elem_to_json(const Field& f, Elem v) {
    if (f.k() == 1) return static_cast<long>(v);
    return json(f.to_coeffs(v));
}

Elem elem_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) {
        long v = j.get<long>();
        if (f.k() == 1) return f.from_int(v);
        if (v >= 0 && v < f.q()) return static_cast<Elem>(v);
        throw Error(ErrorCode::InvalidInput, "element code out of range");
    }
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "element must be integer or array");
    return f.from_coeffs(j.get<std::vector<long>>());
}

json coeffs_to_json(const Field& f, const std::vector<Elem>& coeffs) {
    json out = json::array();
    for (Elem c : coeffs) out.push_back(elem_to_json(f, c));
    return out;
}

std::vector<Elem> coeffs_from_json(const Field& f, const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "coefficient list must be an array");
    std::vector<Elem> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(elem_from_json(f, item));
    return out;
}

json permutation_to_json(const Permutation& g) { return json(g.images()); }

Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "permutation must be an image array");
    return Permutation(j.get<std::vector<int>>());
}

json linear_code_to_json(const LinearCode& c) {
    json basis = json::array();
    for (const Row& r : c.basis()) basis.push_back(coeffs_to_json(c.field(), r));
    return json{{"n", c.n()}, {"field", field_to_json(c.field())}, {"basis", basis}};
}

LinearCode linear_code_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    int n = j.at("n").get<int>();
    RowList rows;
    for (const auto& r : j.at("basis")) rows.push_back(coeffs_from_json(f, r));
    return LinearCode::from_span(f, n, std::move(rows));
}

json cyclic_code_to_json(const CyclicCode& c) {
    json cosets = json::array();
    for (const auto& coset : c.zero_cosets) cosets.push_back(coset);
    return json{{"n", c.n},
                {"field", field_to_json(c.field)},
                {"cosets", cosets},
                {"generator", coeffs_to_json(c.field, c.generator.coeffs())},
                {"idempotent", coeffs_to_json(c.field, c.idempotent.coeffs())},
                {"dim", c.dim},
                {"pairing", c.pairing}};
}

CyclicCode cyclic_code_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("field"))
        throw Error(ErrorCode::InvalidInput, "code spec needs n and field");
    Field f = field_from_json(j.at("field"));
    int n = j.at("n").get<int>();
    CyclicContext ctx = CyclicContext::build(n, f);

    std::optional<CyclicCode> code;
    if (j.contains("cosets")) {
        std::vector<std::vector<int>> cosets = j.at("cosets").get<std::vector<std::vector<int>>>();
        code = code_from_cosets(ctx, cosets);
    }
    if (j.contains("generator")) {
        Poly g(f, coeffs_from_json(f, j.at("generator")));
        CyclicCode from_gen = code_from_generator(ctx, g);
        if (code && from_gen.code != code->code)
            throw Error(ErrorCode::InvalidInput, "generator and cosets disagree");
        if (!code) code = std::move(from_gen);
    }
    if (j.contains("idempotent")) {
        std::vector<Elem> coeffs = coeffs_from_json(f, j.at("idempotent"));
        if (static_cast<int>(coeffs.size()) != n)
            throw Error(ErrorCode::InvalidInput, "idempotent must have exactly n coefficients");
        CyclicCode from_idem = code_from_idempotent(ctx, RingElement(f, std::move(coeffs)));
        if (code && from_idem.code != code->code)
            throw Error(ErrorCode::InvalidInput, "idempotent disagrees with other inputs");
        if (!code) code = std::move(from_idem);
    }
    if (!code)
        throw Error(ErrorCode::InvalidInput, "code spec needs one of cosets/generator/idempotent");
    if (j.contains("dim") && j.at("dim").get<int>() != code->dim)
        throw Error(ErrorCode::InvalidInput, "declared dimension is wrong");
    return std::move(*code);
}

json group_code_to_json(const groupcode::GroupCode& c) {
    json basis = json::array();
    for (const Row& r : c.code.basis()) basis.push_back(coeffs_to_json(c.field, r));
    return json{{"p", c.group.p},
                {"d", c.group.d},
                {"field", field_to_json(c.field)},
                {"idempotent", coeffs_to_json(c.field, c.idempotent)},
                {"basis", basis},
                {"provenance", c.provenance}};
}

groupcode::GroupCode group_code_from_json(const json& j) {
    groupcode::ElemAbelianGroup grp =
        groupcode::make_group(j.at("p").get<long>(), j.at("d").get<int>());
    Field f = field_from_json(j.at("field"));
    if (j.contains("generator"))
        return groupcode::ideal_from_element(grp, f, coeffs_from_json(f, j.at("generator")));
    if (j.contains("idempotent"))
        return groupcode::ideal_from_element(grp, f, coeffs_from_json(f, j.at("idempotent")));
    if (j.contains("basis")) {
        RowList rows;
        for (const auto& r : j.at("basis")) rows.push_back(coeffs_from_json(f, r));
        groupcode::GroupCode out(grp, f);
        out.code = LinearCode::from_span(f, static_cast<int>(grp.order()), std::move(rows));
        out.idempotent = groupcode::idempotent_of_ideal(grp, f, out.code);
        out.provenance = "basis_input";
        return out;
    }
    throw Error(ErrorCode::InvalidInput, "group code spec needs generator, idempotent, or basis");
}

json verdict_to_json(const EquivalenceVerdict& v, bool with_timing) {
    json out{{"schema", kSchemaVersion},
             {"status", to_string(v.status)},
             {"method", to_string(v.method)},
             {"candidates_checked", v.candidates_checked},
             {"ci_certified", v.ci_certified}};
    out["witness"] = v.witness ? permutation_to_json(*v.witness) : json(nullptr);
    out["witness_multiplier"] = v.witness_multiplier ? json(*v.witness_multiplier) : json(nullptr);
    out["elapsed_ms"] = with_timing ? json(v.elapsed_ms) : json(nullptr);
    return out;
}

json search_report_to_json(const oracle::SearchReport& r, bool with_timing) {
    json out{{"schema", kSchemaVersion}, {"checked", r.checked}};
    out["witness"] = r.witness ? permutation_to_json(*r.witness) : json(nullptr);
    out["elapsed_ms"] = with_timing ? json(r.elapsed_ms) : json(nullptr);
    return out;
}

json suite_report_to_json(const suites::SuiteReport& r, bool with_timing) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.details.empty()) item["details"] = c.details;
        checks.push_back(std::move(item));
    }
    json stats = json::object();
    for (const auto& [k, v] : r.stats) stats[k] = v;
    json out{{"schema", kSchemaVersion},
             {"suite", r.suite},
             {"exploratory", r.exploratory},
             {"passed", r.checks.size() - r.failed()},
             {"failed", r.failed()},
             {"checks", checks},
             {"stats", stats}};
    out["elapsed_ms"] = with_timing ? json(r.elapsed_ms) : json(nullptr);
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace cyclequiv::jsonio
