#include "ecpair/json_io.hpp"

namespace ecp {

namespace {

Json row_fields(const RowKey& k) {
    Json j;
    j["A"] = k.A_label();
    j["B"] = k.b;
    return j;
}

Json orbit_json(const RowKey& k) { return k.orbit.empty() ? Json(nullptr) : Json(k.orbit); }

} // namespace

Json to_json(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json to_json(const TensorClass& c) {
    Json j = Json::object();
    for (const auto& [p, v] : c.components()) j[p.get_str()] = v.str();
    return j;
}

Json to_json(const Point& P) {
    if (P.is_origin()) return "O";
    return Json::array({to_json(P.x), to_json(P.y)});
}

Json to_json(const Curve& E) {
    Json j = Json::array();
    for (const auto& a : E.coeffs()) j.push_back(to_json(a));
    return j;
}

Json to_json(const FactoredRational& z) {
    Json f = Json::object();
    for (const auto& [p, e] : z.exponents) f[p.get_str()] = e;
    Json j;
    j["factors"] = f;
    j["sign"] = z.sign;
    return j;
}

Json to_json(const Gram& g) {
    Json j = Json::array();
    for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        j.push_back(r);
    }
    return j;
}

Json to_json(const Classification& c) {
    Json j = row_fields(c.row);
    Json gens = Json::array({to_json(c.group.gen1)});
    if (c.group.d2 == 2) gens.push_back(to_json(c.group.gen2));
    j["generators"] = gens;
    j["gram"] = to_json(c.gram);
    Json intr = Json::array();
    for (const auto& [a, b] : c.intrinsic) intr.push_back(to_json(c.group.element(a, b)));
    j["intrinsic"] = intr;
    j["orbit"] = orbit_json(c.row);
    return j;
}

Json to_json(const Census& c) {
    Json rows = Json::array();
    for (const auto& [key, row] : c.rows) {
        Json r = row_fields(key);
        r["count"] = row.count();
        r["orbit"] = orbit_json(key);
        Json w;
        w["curve"] = row.witness ? to_json(*row.witness) : Json(nullptr);
        w["id"] = row.witness_id;
        w["j"] = row.witness ? to_json(row.witness->invariants().j) : Json(nullptr);
        r["witness"] = w;
        rows.push_back(r);
    }
    Json j;
    j["H"] = c.H;
    j["examined"] = c.examined;
    j["family"] = c.family;
    j["rows"] = rows;
    j["skipped"] = c.skipped;
    return j;
}

Json to_json(const TableReport& r, long H) {
    auto keys = [](const std::vector<RowKey>& ks) {
        Json a = Json::array();
        for (const auto& k : ks) a.push_back(k.str());
        return a;
    };
    Json rows = Json::array();
    for (const auto& line : r.lines) {
        Json l = row_fields(line.key);
        l["admissible"] = line.admissible;
        l["count"] = line.count;
        l["orbit"] = orbit_json(line.key);
        l["witness"] = line.witness_id;
        rows.push_back(l);
    }
    Json j;
    j["H"] = H;
    j["inadmissible"] = keys(r.inadmissible);
    j["missing"] = keys(r.missing);
    j["pass"] = r.ok();
    j["rows"] = rows;
    return j;
}

Json to_json(const IdentityResult& r) {
    Json j;
    if (!r.error.empty()) j["error"] = r.error;
    j["id"] = r.id;
    j["mismatch"] = r.mismatch ? to_json(*r.mismatch) : Json(nullptr);
    j["pass"] = r.pass;
    j["precision"] = r.precision;
    return j;
}

Json to_json(const UniversalReport& r) {
    Json j;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["family"] = r.family;
    j["pass"] = r.pass();
    j["skipped"] = r.skipped;
    return j;
}

Json error_json(const std::string& kind, const std::string& detail) {
    Json e;
    e["detail"] = detail;
    e["kind"] = kind;
    Json j;
    j["error"] = e;
    return j;
}

} // namespace ecp
