#include "ecpair/census.hpp"

#include "ecpair/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <regex>
#include <thread>

namespace ecp {

namespace {

bool power_free(long a, int k) {
    a = std::labs(a);
    for (long p = 2; p * p <= a; ++p) {
        long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (a % pk == 0) return false;
    }
    return a != 0;
}

std::vector<long> scale_grid(long bound, int k) {
    std::vector<long> out;
    for (long a = -bound; a <= bound; ++a)
        if (a != 0 && power_free(a, k)) out.push_back(a);
    return out;
}

} // namespace

void Census::merge(const Census& o) {
    examined += o.examined;
    skipped += o.skipped;
    for (const auto& [key, row] : o.rows) {
        auto it = rows.find(key);
        if (it == rows.end()) {
            rows.emplace(key, row);
            continue;
        }
        CensusRow& mine = it->second;
        mine.js.insert(row.js.begin(), row.js.end());
        if (row.first_index < mine.first_index) {
            mine.first_index = row.first_index;
            mine.witness_id = row.witness_id;
            mine.witness = row.witness;
        }
    }
}

const std::vector<std::string>& census_families() {
    static const std::vector<std::string> v = {"E2",  "E3",   "E4",   "E5",   "E6",   "E7",   "E8",
                                               "E9",  "E10",  "E12",  "E2x2", "E4x2", "E6x2", "E8x2"};
    return v;
}

std::vector<FamilyId> census_parameters(const std::string& family, long H, const SweepOptions& opts) {
    if (H < 1) fail("DomainError", "height bound must be positive");
    static const std::regex re(R"(E(\d+)(x2)?)");
    std::smatch m;
    if (!std::regex_match(family, m, re)) fail("ParseError", "unknown family " + family);
    int N = std::stoi(m[1].str());
    bool bic = m[2].matched;
    std::vector<FamilyId> out;
    auto push = [&](const FamilyId& id) {
        if (!is_degenerate(id)) out.push_back(id);
    };
    const auto ts = rationals_of_height(H);
    if (!bic && N == 2) {
        auto as = scale_grid(opts.a_bound, 2);
        for (const auto& t : ts)
            for (long a : as) push({t == -1 ? Form::Order2Minus1 : Form::Order2, 2, t, a});
    } else if (!bic && N == 3) {
        for (const auto& t : ts)
            if (t != -1) push({Form::Order3, 3, t, 0});
        for (long a : scale_grid(H, 3)) push({Form::Order3Minus1, 3, -1, a});
    } else if (bic && N == 2) {
        auto as = scale_grid(opts.a_bound, 2);
        for (const auto& u : ts)
            for (long a : as) push({Form::Bicyclic2, 2, u, a});
    } else if (bic) {
        if (N != 4 && N != 6 && N != 8) fail("ParseError", "no bicyclic family " + family);
        for (const auto& u : ts) push({Form::TateBicyclic, N, u, 0});
    } else {
        const auto& orders = cyclic_orders();
        if (std::find(orders.begin(), orders.end(), N) == orders.end()) fail("ParseError", "no family " + family);
        for (const auto& t : ts) push({Form::TateCyclic, N, t, 0});
    }
    return out;
}

Census family_search(const std::string& family, long H, const SweepOptions& opts) {
    auto params = census_parameters(family, H, opts);
    int jobs = std::max(1, opts.jobs);
    std::vector<Census> partial(jobs);
    std::atomic<size_t> next{0};
    auto worker = [&](int w) {
        Census& c = partial[w];
        for (size_t i; (i = next++) < params.size();) {
            FamilyCurve fc = build_curve(params[i]);
            Classification cl;
            try {
                cl = classify(fc.curve, false);
            } catch (const MathError& e) {
                if (e.kind() != "FactorTooHard") throw;
                ++c.skipped;
                continue;
            }
            ++c.examined;
            CensusRow& row = c.rows[cl.row];
            row.key = cl.row;
            row.js.insert(fc.curve.invariants().j);
            long idx = static_cast<long>(i);
            if (row.first_index < 0 || idx < row.first_index) {
                row.first_index = idx;
                row.witness_id = params[i].str();
                row.witness = fc.curve;
            }
        }
    };
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                worker(w);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next = params.size();
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    Census out;
    out.family = family;
    out.H = H;
    for (const auto& c : partial) out.merge(c);
    return out;
}

TableReport table_check(const std::vector<Census>& censuses, bool include_trivial) {
    Census all;
    for (const auto& c : censuses) all.merge(c);
    TableReport rep;
    for (const auto& key : admissible_rows()) {
        if (key.d1 == 1 && !include_trivial) continue;
        TableLine line{key, true, 0, ""};
        auto it = all.rows.find(key);
        if (it != all.rows.end()) {
            line.count = it->second.count();
            line.witness_id = it->second.witness_id;
        }
        if (line.count == 0) rep.missing.push_back(key);
        rep.lines.push_back(line);
    }
    for (const auto& [key, row] : all.rows) {
        if (is_admissible(key)) continue;
        rep.inadmissible.push_back(key);
        rep.lines.push_back({key, false, row.count(), row.witness_id});
    }
    return rep;
}

void enforce(const TableReport& report) {
    if (!report.inadmissible.empty()) fail("InadmissibleRow", report.inadmissible.front().str());
    if (!report.missing.empty()) fail("MissingRow", report.missing.front().str());
}

} // namespace ecp
