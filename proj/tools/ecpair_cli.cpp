#include "ecpair/census.hpp"
#include "ecpair/classifier.hpp"
#include "ecpair/errors.hpp"
#include "ecpair/families.hpp"
#include "ecpair/hauptmodul.hpp"
#include "ecpair/json_io.hpp"
#include "ecpair/pairing.hpp"
#include "ecpair/tate.hpp"
#include "ecpair/torsion.hpp"
#include "ecpair/universal_check.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <regex>

using namespace ecp;

namespace {

struct Options {
    std::string curve, family, points, Mvec, id, value;
    long M = 0, height = 0, samples = 200, precision = 200, m = 0;
    std::string p, q, a, b;
    int jobs = 1;
    std::uint64_t seed = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The curve with its base points: the marked points of a family, otherwise
// the torsion generators.
struct Input {
    Curve curve;
    Point P;
    std::optional<Point> Q;
    std::optional<FamilyId> id;
};

Input read_input(const Options& o) {
    if (o.curve.empty() == o.family.empty()) throw UsageError("exactly one of --curve and --family is required");
    if (!o.family.empty()) {
        FamilyId id = FamilyId::parse(o.family);
        FamilyCurve fc = build_curve(id);
        return {fc.curve, fc.P, fc.Q, id};
    }
    auto a = parse_rational_list(o.curve);
    if (a.size() != 5) throw UsageError("--curve takes five coefficients a1,a2,a3,a4,a6");
    Curve E(a[0], a[1], a[2], a[3], a[4]);
    TorsionGroup G = torsion_subgroup(E);
    std::optional<Point> Q;
    if (G.d2 == 2) Q = G.gen2;
    return {E, G.gen1, Q, std::nullopt};
}

// "O", "x:y", or an integer combination such as "P", "2P", "Q", "3P+Q".
Point read_point(const Input& in, const std::string& label) {
    if (label == "O") return Point::origin();
    auto colon = label.find(':');
    if (colon != std::string::npos) {
        Point X = Point::affine(parse_rational(label.substr(0, colon)), parse_rational(label.substr(colon + 1)));
        if (!in.curve.contains(X)) fail("DomainError", "point " + label + " is not on the curve");
        return X;
    }
    static const std::regex term(R"(([+-]?)(\d*)([PQ]))");
    Point out = Point::origin();
    size_t pos = 0;
    for (auto it = std::sregex_iterator(label.begin(), label.end(), term); it != std::sregex_iterator(); ++it) {
        const auto& mt = *it;
        if (static_cast<size_t>(mt.position()) != pos) break;
        pos += static_cast<size_t>(mt.length());
        long k = mt[2].length() ? std::stol(mt[2].str()) : 1;
        if (mt[1].str() == "-") k = -k;
        if (mt[3].str() == "Q" && !in.Q) fail("DomainError", "no second generator Q");
        out = in.curve.add(out, in.curve.mul(mt[3].str() == "P" ? in.P : *in.Q, k));
    }
    if (pos != label.size() || label.empty()) throw UsageError("bad point label: " + label);
    return out;
}

// Re-emit the top-level keys in sorted order after fields were appended.
Json sorted_keys(const Json& j) {
    std::map<std::string, Json> m;
    for (const auto& it : j.items()) m[it.key()] = it.value();
    Json out = Json::object();
    for (auto& [k, v] : m) out[k] = v;
    return out;
}

std::string group_label(const TorsionGroup& G) {
    if (G.size() == 1) return "0";
    return G.d2 == 2 ? std::to_string(G.d1) + "x2" : std::to_string(G.d1);
}

Json cmd_pairing(const Options& o) {
    Input in = read_input(o);
    std::vector<std::string> labels;
    std::stringstream ss(o.points.empty() ? "P,P" : o.points);
    for (std::string s; std::getline(ss, s, ',');) labels.push_back(s);
    if (labels.size() != 2) throw UsageError("--points takes two labels");
    Point X = read_point(in, labels[0]), Y = read_point(in, labels[1]);
    Json j;
    j["points"] = Json::array({to_json(X), to_json(Y)});
    j["value"] = to_json(pairing_points(in.curve, X, Y));
    return j;
}

Json cmd_gram(const Options& o) {
    Input in = read_input(o);
    TorsionGroup G = in.id ? group_from_generators(in.curve, in.P, in.Q.value_or(Point::origin()))
                           : torsion_subgroup(in.curve);
    Json gens = Json::array({to_json(G.gen1)});
    if (G.d2 == 2) gens.push_back(to_json(G.gen2));
    Json j;
    j["generators"] = gens;
    j["gram"] = to_json(gram_matrix(in.curve, G));
    j["torsion"] = group_label(G);
    return j;
}

Json cmd_classify(const Options& o) {
    Input in = read_input(o);
    Json j = to_json(classify(in.curve));
    j["curve"] = to_json(in.curve);
    if (o.M > 0) j["membership"] = membership_cyclic(in.curve, in.P, o.M);
    if (!o.Mvec.empty()) {
        auto v = parse_rational_list(o.Mvec);
        if (v.size() != 3) throw UsageError("--Mvec takes three integers");
        if (!in.Q) fail("DomainError", "--Mvec needs a second generator Q");
        std::array<long, 3> M{};
        for (size_t i = 0; i < 3; ++i) {
            if (v[i].get_den() != 1) throw UsageError("--Mvec takes integers");
            M[i] = v[i].get_num().get_si();
        }
        j["membership"] = membership_bicyclic(in.curve, in.P, *in.Q, M);
    }
    return sorted_keys(j);
}

Json cmd_search(const Options& o) {
    if (o.family.empty()) throw UsageError("--family <name> is required, e.g. E5 or E4x2");
    SweepOptions sw;
    sw.jobs = o.jobs;
    return to_json(family_search(o.family, o.height > 0 ? o.height : 30, sw));
}

Json cmd_table(const Options& o, bool& ok) {
    SweepOptions sw;
    sw.jobs = o.jobs;
    long H = o.height > 0 ? o.height : 30;
    std::vector<Census> all;
    for (const auto& f : census_families()) all.push_back(family_search(f, H, sw));
    TableReport rep = table_check(all);
    ok = rep.ok();
    return to_json(rep, H);
}

Json cmd_verify_universal(const Options& o, bool& ok) {
    if (o.family.empty()) throw UsageError("--family <name> is required, e.g. E5");
    UniversalReport rep = verify_universal(o.family, o.samples, o.height > 0 ? o.height : 40, o.seed);
    ok = rep.pass();
    return to_json(rep);
}

Json cmd_verify_qseries(const Options& o, bool& ok) {
    if (o.id.empty()) throw UsageError("--id <name|all> is required");
    if (o.id != "all") {
        IdentityResult r = verify_identity(o.id, o.precision);
        ok = r.pass;
        return to_json(r);
    }
    Json results = Json::array();
    ok = true;
    for (const auto& r : verify_identities(identity_names(), o.precision, 1)) {
        ok = ok && r.pass;
        results.push_back(to_json(r));
    }
    Json j;
    j["pass"] = ok;
    j["results"] = results;
    return j;
}

Json cmd_tate(const Options& o) {
    if (o.p.empty() || o.q.empty() || o.m <= 0) throw UsageError("--p, --q and --m are required");
    if (o.a.empty() != o.b.empty()) throw UsageError("--a and --b go together");
    TateData T = TateData::make(Integer(o.p), parse_rational(o.q));
    Json j;
    if (!o.a.empty()) {
        Rational a = parse_rational(o.a), b = parse_rational(o.b);
        ThreeWay tw = tate_pairing_three_way(T, a, b, o.m);
        j["consistent"] = tw.consistent();
    }
    j["delta_kernel"] = delta_kernel(T, o.m);
    j["m"] = o.m;
    j["m_T"] = intrinsic_order_local(T, o.m);
    j["n"] = T.n;
    j["p"] = T.p.get_str();
    if (!o.a.empty()) {
        Rational a = parse_rational(o.a), b = parse_rational(o.b);
        j["pairing"] = to_json(tate_pairing_rational(T, a, b, o.m));
        j["pairing_valuation"] = tate_pairing_three_way(T, a, b, o.m).from_q.str();
    }
    j["q"] = to_json(T.q);
    if (!o.a.empty()) {
        j["s_a"] = s_m_of(T, parse_rational(o.a), o.m);
        j["s_b"] = s_m_of(T, parse_rational(o.b), o.m);
    }
    j["s_image"] = s_m_image(T, o.m);
    return j;
}

Json cmd_factor(const Options& o) {
    if (o.value.empty()) throw UsageError("factor needs a nonzero rational");
    Rational r = parse_rational(o.value);
    Json j = to_json(FactoredRational::from_rational(r));
    j["value"] = to_json(r);
    return j;
}

int emit_error(const std::string& kind, const std::string& detail, int code) {
    std::cerr << error_json(kind, detail).dump() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion pairings on elliptic curves over Q"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* c) {
        c->add_option("--curve", o.curve, "a1,a2,a3,a4,a6");
        c->add_option("--family", o.family, "family id, e.g. E5@t=2 or E4x2@u=1/3");
    };
    auto* pairing = app.add_subcommand("pairing", "pairing of two points");
    input(pairing);
    pairing->add_option("--points", o.points, "two labels: O, x:y, or combinations of P and Q such as 2P+Q");
    auto* gram = app.add_subcommand("gram", "Gram matrix on the torsion generators");
    input(gram);
    auto* classify_cmd = app.add_subcommand("classify", "torsion, intrinsic subgroup and table row");
    input(classify_cmd);
    classify_cmd->add_option("--M", o.M, "test <P, (N/M)P> = 0");
    classify_cmd->add_option("--Mvec", o.Mvec, "M1,M2,M3 for the bicyclic membership test");
    auto* search = app.add_subcommand("search", "census of one family sweep");
    search->add_option("--family", o.family, "E2, E3, E4..E12, E2x2, E4x2, E6x2, E8x2")->required();
    search->add_option("--height", o.height, "sweep height (default 30)");
    search->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    auto* table = app.add_subcommand("table", "census of every family against the table");
    table->add_option("--height", o.height, "sweep height (default 30)");
    table->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    auto* vu = app.add_subcommand("verify-universal", "oracle against the closed forms on a random sample");
    vu->add_option("--family", o.family, "family name, e.g. E5")->required();
    vu->add_option("--samples", o.samples, "sample size")->check(CLI::NonNegativeNumber);
    vu->add_option("--height", o.height, "parameter height (default 40)");
    vu->add_option("--seed", o.seed, "sampling seed");
    auto* vq = app.add_subcommand("verify-qseries", "check a q-series identity");
    vq->add_option("--id", o.id, "identity name or 'all'")->required();
    vq->add_option("--precision", o.precision, "terms past the leading exponent")->check(CLI::PositiveNumber);
    auto* tate = app.add_subcommand("tate", "Tate curve pairing data over Q_p");
    tate->add_option("--p", o.p, "prime")->required();
    tate->add_option("--q", o.q, "Tate parameter, positive valuation")->required();
    tate->add_option("--m", o.m, "torsion order")->required()->check(CLI::PositiveNumber);
    tate->add_option("--a", o.a, "m-torsion representative");
    tate->add_option("--b", o.b, "m-torsion representative");
    auto* factor = app.add_subcommand("factor", "factor a nonzero rational");
    factor->add_option("value", o.value, "rational")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what(), 1);
    }

    try {
        bool ok = true;
        Json out;
        if (pairing->parsed()) out = cmd_pairing(o);
        else if (gram->parsed()) out = cmd_gram(o);
        else if (classify_cmd->parsed()) out = cmd_classify(o);
        else if (search->parsed()) out = cmd_search(o);
        else if (table->parsed()) out = cmd_table(o, ok);
        else if (vu->parsed()) out = cmd_verify_universal(o, ok);
        else if (vq->parsed()) out = cmd_verify_qseries(o, ok);
        else if (tate->parsed()) out = cmd_tate(o);
        else out = cmd_factor(o);
        std::cout << out.dump() << "\n";
        if (!ok) return emit_error("VerificationFailed", "see the report on stdout", 2);
        return 0;
    } catch (const UsageError& e) {
        return emit_error("UsageError", e.what(), 1);
    } catch (const MathError& e) {
        return emit_error(e.kind(), e.detail(), e.kind() == "ParseError" ? 1 : 2);
    } catch (const std::exception& e) {
        return emit_error("InternalError", e.what(), 1);
    }
}
