#include "ecpair/classifier.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>

namespace ecp {

std::string RowKey::A_label() const {
    if (d1 == 1) return "0";
    if (d2 == 1) return std::to_string(d1);
    return std::to_string(d1) + "x" + std::to_string(d2);
}

std::string RowKey::str() const {
    std::string s = A_label() + "|" + std::to_string(b);
    if (!orbit.empty()) s += "|" + orbit;
    return s;
}

const std::vector<RowKey>& admissible_rows() {
    static const std::vector<RowKey> rows = [] {
        std::vector<RowKey> r;
        auto add = [&](long d1, long d2, std::vector<long> bs) {
            for (long b : bs) r.push_back({d1, d2, b, ""});
        };
        add(1, 1, {1});
        add(2, 1, {1, 2});
        add(3, 1, {1, 3});
        add(4, 1, {1, 2, 4});
        add(5, 1, {1, 5});
        add(6, 1, {1, 2, 3});
        add(7, 1, {1});
        add(8, 1, {1, 2});
        add(9, 1, {1});
        add(10, 1, {1});
        add(12, 1, {1});
        add(2, 2, {1, 2});
        r.push_back({4, 2, 1, ""});
        r.push_back({4, 2, 2, "2P"});
        r.push_back({4, 2, 2, "Q"});
        add(6, 2, {1});
        add(8, 2, {1});
        return r;
    }();
    return rows;
}

bool is_admissible(const RowKey& row) {
    const auto& rows = admissible_rows();
    return std::find(rows.begin(), rows.end(), row) != rows.end();
}

Classification classify(const Curve& E, bool check) {
    Classification out;
    out.group = torsion_subgroup(E);
    out.gram = gram_matrix(E, out.group);
    out.intrinsic = intrinsic_subgroup(out.gram, out.group);
    RowKey& row = out.row;
    row.d1 = out.group.d1;
    row.d2 = out.group.d2;
    row.b = static_cast<long>(out.intrinsic.size());
    if (row.d1 == 4 && row.d2 == 2 && row.b == 2) {
        // The nonzero element of B lies in 2A = {(0,0), (2,0)} or not.
        bool in_2A = false;
        for (const auto& [i, j] : out.intrinsic)
            if (i == 2 && j == 0) in_2A = true;
        row.orbit = in_2A ? "2P" : "Q";
    }
    if (check && !is_admissible(row)) fail("InadmissibleRow", row.str() + " for " + E.str());
    return out;
}

bool membership_cyclic(const Curve& E, const Point& P, long M) {
    long N = E.order(P);
    const auto& orders = cyclic_orders();
    if (std::find(orders.begin(), orders.end(), N) == orders.end())
        fail("OrderOutOfRange", "order of P must be in {4,...,10,12}, got " + std::to_string(N));
    if (M < 1 || N % M) fail("DomainError", "M must divide N");
    Rational t = recognize_parameter(E, P);
    return is_power_up_to_sign(f_table(static_cast<int>(N)).eval_factored(t), M);
}

bool membership_bicyclic(const Curve& E, const Point& P, const Point& Q, std::array<long, 3> M) {
    long N = E.order(P);
    if (N != 4 && N != 6 && N != 8) fail("OrderOutOfRange", "order of P must be 4, 6 or 8");
    if (M[0] < 1 || N % M[0]) fail("DomainError", "M1 must divide N");
    for (int i = 1; i < 3; ++i)
        if (M[i] != 1 && M[i] != 2) fail("DomainError", "M2 and M3 must be 1 or 2");
    Rational u = recognize_bicyclic_parameter(E, P, Q);
    for (int nu = 1; nu <= 3; ++nu)
        if (!is_power_up_to_sign(g_table(static_cast<int>(N), nu).eval_factored(u), M[nu - 1])) return false;
    return true;
}

} // namespace ecp
