#include "subzeta/acceptance.hpp"

#include "subzeta/catalog.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/formulas.hpp"
#include "subzeta/funeq.hpp"
#include "subzeta/lattice_enum.hpp"
#include "subzeta/reduced.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace subzeta {

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    // Records the first failure only.
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail.str("");
            detail << "FAILED: " << what;
        }
    }
};

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

std::uint64_t eval_count(const QPoly& c, long p) {
    mpq_class v = c.eval(mpq_class(p));
    return v.get_num().get_ui();
}

void criterion1(Outcome& o, const CountOptions& copt) {
    int checked = 0;
    for (int n : {2, 3, 4}) {
        auto series = series_in_t(zeta_c1(n), 5);
        for (long p : {2L, 3L})
            for (int k = 0; k <= 5; ++k) {
                std::uint64_t got = count_sublattices(n, Prime(p), k, copt);
                std::uint64_t want = eval_count(series[k], p);
                o.require(got == want, "n=" + std::to_string(n) + " p=" + std::to_string(p) + " k=" +
                                           std::to_string(k) + ": " + std::to_string(got) + " vs " +
                                           std::to_string(want));
                ++checked;
            }
    }
    if (o.ok) o.detail << checked << " (n,p,k) counts match the product formula";
}

void criterion2(Outcome& o, const CountOptions& copt) {
    EndoSetup h = heisenberg();
    for (long p : {2L, 3L, 5L}) {
        auto z = zeta_series_bruteforce(h, Prime(p), 3, copt);
        std::vector<std::uint64_t> want{1, std::uint64_t(p + 1), std::uint64_t(p * p + p + 1),
                                        std::uint64_t(p * p * p + 2 * p * p + p + 1)};
        o.require(z == want, "p=" + std::to_string(p) + " counts differ");
        if (o.ok) o.detail << "p=" << p << ": " << z[1] << "," << z[2] << "," << z[3] << "; ";
    }
}

void criterion3(Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
        FEShape s{n % 2 ? -1 : 1, binom2(n), n};
        o.require(check_funeq(zeta_c1(n), s).ok, "zeta_c1(" + std::to_string(n) + ") with " + to_string(s));
    }
    if (o.ok) o.detail << "n = 1..6 satisfy the predicted functional equation";
}

void criterion4(Outcome& o, const CountOptions& copt) {
    for (int n = 1; n <= 3; ++n) {
        FEShape s = fe_shape_abelian(n);
        o.require(s == FEShape{1, binom2(2 * n), 3 * n}, "fe_shape_abelian(" + std::to_string(n) + ")");
        o.require(check_funeq(zeta_abelian_inert(n), s).ok, "funeq n=" + std::to_string(n));
    }
    CountOptions pruned = copt;
    pruned.strategy = Strategy::pruned;
    for (auto [n, K] : {std::pair{1, 6}, std::pair{2, 4}}) {
        auto series = series_in_t(zeta_abelian_inert(n), K);
        EndoSetup e = m_f(Partition({n}));
        for (long p : {2L, 3L})
            for (int k = 0; k <= K; ++k) {
                std::uint64_t got = count_invariant(e, Prime(p), k, pruned);
                std::uint64_t want = eval_count(series[k], p);
                o.require(got == want, "m_f((" + std::to_string(n) + ")) p=" + std::to_string(p) + " k=" +
                                           std::to_string(k) + ": " + std::to_string(got) + " vs " +
                                           std::to_string(want));
            }
    }
    if (o.ok) o.detail << "FE for n <= 3; counts match for n=1 (k<=6) and n=2 (k<=4) at p=2,3";
}

void criterion5(Outcome& o, const CountOptions& copt) {
    struct Case {
        std::string name;
        EndoSetup e;
        long p;
        int K;
    };
    std::vector<Case> cases{{"heisenberg", heisenberg(), 2, 4},
                            {"heisenberg", heisenberg(), 3, 4},
                            {"maximal:3", maximal_class(3), 2, 3}};
    for (const auto& c : cases) {
        std::string tag = c.name + " p=" + std::to_string(c.p) + " K=" + std::to_string(c.K);
        StabilityReport st = check_delta_stability(c.e, Prime(c.p), c.K, copt);
        o.require(st.ok, tag + " delta stability: " + st.witness);
        XiReport xi = verify_xi_identity(c.e, Prime(c.p), c.K, copt);
        o.require(xi.ok, tag + " xi identity fails at degree " + std::to_string(xi.first_mismatch));
        if (o.ok) {
            o.detail << tag << " A=";
            for (size_t j = 0; j < xi.a_triangle.size(); ++j) o.detail << (j ? "," : "") << xi.a_triangle[j];
            o.detail << "; ";
        }
    }
}

void criterion6(Outcome& o) {
    EndoSetup h = heisenberg();
    Prime p(2);
    IntMat m1{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
    IntMat m2m{{1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    o.require(m_tilde1(m1, h, p) == 1 && m_tilde1_closed_form(m1, h, p) == 1, "m~1(M1) != 1");
    o.require(m_tilde1(m2m, h, p) == 1 && m_tilde1_closed_form(m2m, h, p) == 1, "m~1(M2) != 1");
    o.require(weight_w(m1, h, p) == 0, "w(M1) != 0");
    o.require(weight_w(m2m, h, p) == 1, "w(M2) != 1");
    if (o.ok) o.detail << "m~1 = 1, 1 (search and closed form); w = 0, 1";
}

void criterion7(Outcome& o) {
    for (auto [c, d] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        CentralData cd = centralizer_series(free_nilpotent(c, d));
        auto want = witt_ranks(c, d);
        std::vector<std::int64_t> got(cd.coranks.begin(), cd.coranks.end());
        o.require(got == want, "f_{" + std::to_string(c) + "," + std::to_string(d) + "} coranks differ");
        if (o.ok) {
            o.detail << "f_{" << c << "," << d << "} N=(";
            for (size_t i = 0; i < got.size(); ++i) o.detail << (i ? "," : "") << got[i];
            o.detail << ") ";
        }
    }
}

void criterion8(Outcome& o) {
    std::vector<std::string> ok_names{"heisenberg", "l:3,3"};
    for (int c = 1; c <= 5; ++c) ok_names.push_back("maximal:" + std::to_string(c));
    for (int r = 1; r <= 3; ++r) ok_names.push_back("grenham:" + std::to_string(r));
    for (int s = 1; s <= 3; ++s)
        for (const auto& f : partitions_of(s)) {
            std::string parts = f.to_string().substr(1, f.to_string().size() - 2);
            ok_names.push_back("mf:" + parts);
            ok_names.push_back("u:" + parts);
        }
    for (int c = 2; c <= 6; ++c)
        for (int d = 2; d <= 7; ++d) {
            auto w = witt_ranks(c, d);
            if (w[0] <= 30) ok_names.push_back("free:" + std::to_string(c) + "," + std::to_string(d));
        }
    for (const auto& name : ok_names) o.require(check_condition(lookup(name)).ok, name + " should satisfy the condition");

    ConditionVerdict f = check_condition(fil4());
    o.require(!f.ok && f.violation && f.violation->generator == 2 && f.violation->row == 3,
              "fil4 should violate at generator 2, row 3");
    ConditionVerdict g = check_condition(g66());
    o.require(!g.ok && g.violation && g.violation->generator == 3, "g66 should violate on ad(x3)");
    if (o.ok)
        o.detail << ok_names.size() << " algebras pass; fil4 violation at C2 entry (" << f.violation->row << ","
                 << f.violation->col << ") block (" << f.violation->block_row << "," << f.violation->block_col
                 << "); g66 violation on generator " << g.violation->generator;
}

void criterion9(Outcome& o) {
    for (const char* l : {"1", "2", "3", "2,1", "2,2", "3,2", "3,3"}) {
        Partition lambda = Partition::parse(l);
        auto exact = hilbert_series_exact(lambda).coefficients(12);
        auto brute = hilbert_series_truncated(lambda, 12);
        bool same = true;
        for (int k = 0; k <= 12; ++k) same = same && exact[k] == mpq_class(brute[k]);
        o.require(same, "Hilbert series of " + lambda.to_string() + " differs from the oracle");
    }
    int tested = 0, rect = 0;
    for (int s = 1; s <= 7; ++s)
        for (const auto& lambda : partitions_of(s)) {
            ReducedFEReport r = check_reduced_fe(lambda);
            o.require(r.ok, "reduced FE mismatch for " + lambda.to_string());
            ++tested;
            rect += r.near_rectangle;
        }
    if (o.ok) o.detail << "series agree to T^12; " << tested << " partitions, " << rect << " near rectangles";
}

void criterion10(Outcome& o) {
    auto v4 = minimal_interior_vectors(Partition({4}));
    o.require(v4 == std::vector<std::vector<long>>{{4, 4, 3, 2, 1}}, "lambda=(4) should give only (4,4,3,2,1)");
    auto v32 = minimal_interior_vectors(Partition({3, 2}));
    o.require(v32.size() >= 2, "lambda=(3,2) should have several minimal interior vectors");
    if (o.ok) o.detail << "(4): (4,4,3,2,1); (3,2): " << v32.size() << " minimal vectors";
}

void criterion11(Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
        RatFun2 w = zeta_c1(n);
        o.require(check_degree_conjecture(w, n, {n}).ok(), "degree checks for zeta_c1(" + std::to_string(n) + ")");
        o.require(check_s0(w, n).ok, "s=0 value for zeta_c1(" + std::to_string(n) + ")");
    }
    for (int n = 1; n <= 3; ++n) {
        RatFun2 w = zeta_abelian_inert(n);
        o.require(check_degree_conjecture(w, 2 * n, {2 * n, n}).ok(),
                  "degree checks for zeta_abelian_inert(" + std::to_string(n) + ")");
        o.require(check_s0(w, 2 * n).ok, "s=0 value for zeta_abelian_inert(" + std::to_string(n) + ")");
    }
    if (o.ok) o.detail << "zeta_c1(1..6) and zeta_abelian_inert(1..3) pass degree, limit and s=0 checks";
}

void criterion12(Outcome& o, const CountOptions& copt) {
    const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19};  // the last is held out
    EndoSetup e = l_lambda(Partition({2}));
    CountOptions pruned = copt;
    pruned.strategy = Strategy::pruned;
    std::vector<std::vector<std::pair<long, mpq_class>>> samples(4);
    for (long p : primes) {
        auto z = zeta_series_bruteforce(e, Prime(p), 3, pruned);
        for (int k = 0; k <= 3; ++k) samples[k].emplace_back(p, mpq_class(z[k]));
    }
    auto cone = hilbert_series_truncated(Partition({2}), 3);
    for (int k = 0; k <= 3; ++k) {
        QPoly poly;
        try {
            poly = interpolate_uniform(samples[k], 2 * k);
        } catch (const PreconditionError& err) {
            o.require(false, "k=" + std::to_string(k) + ": " + err.what());
            return;
        }
        mpq_class at1 = poly.eval(mpq_class(1));
        o.require(at1 == mpq_class(cone[k]), "k=" + std::to_string(k) + ": W(1) = " + at1.get_str() +
                                                 ", cone coefficient " + std::to_string(cone[k]));
        if (o.ok) o.detail << "k=" << k << ": " << poly.to_string("q") << " -> " << at1.get_str() << "; ";
    }
}

struct CriterionDef {
    std::string title;
    double budget;
    std::function<void(Outcome&, const CountOptions&)> run;
};

const std::map<int, CriterionDef>& criteria() {
    static const std::map<int, CriterionDef> table{
        {1, {"sublattice enumeration vs product formula", 60, criterion1}},
        {2, {"Heisenberg ideal counts", 30, criterion2}},
        {3, {"functional equation, class 1", 0, [](Outcome& o, const CountOptions&) { criterion3(o); }}},
        {4, {"abelian-by-inert formula: FE and counts", 300, criterion4}},
        {5, {"xi identity and delta stability", 300, criterion5}},
        {6, {"worked example m~1, w", 0, [](Outcome& o, const CountOptions&) { criterion6(o); }}},
        {7, {"Witt ranks vs centralizer coranks", 0, [](Outcome& o, const CountOptions&) { criterion7(o); }}},
        {8, {"block-shift condition verdicts", 0, [](Outcome& o, const CountOptions&) { criterion8(o); }}},
        {9, {"reduced zeta functions", 120, [](Outcome& o, const CountOptions&) { criterion9(o); }}},
        {10, {"minimal interior vectors", 0, [](Outcome& o, const CountOptions&) { criterion10(o); }}},
        {11, {"degree conjecture and s=0 value", 0, [](Outcome& o, const CountOptions&) { criterion11(o); }}},
        {12, {"q=1 interpolation vs cone series", 600, criterion12}},
    };
    return table;
}

const std::map<std::string, std::vector<int>>& aliases() {
    static const std::map<std::string, std::vector<int>> table{
        {"enumeration", {1, 2}},
        {"formulas", {3, 4, 11}},
        {"funeq", {3, 4, 11}},
        {"structure", {5, 6}},
        {"algebras", {7, 8}},
        {"reduced", {9, 10, 12}},
        {"fast", {3, 6, 7, 8, 9, 10, 11}},
    };
    return table;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
    auto it = criteria().find(id);
    if (it == criteria().end()) throw UnknownNameError("no acceptance criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.title = it->second.title;
    r.budget = it->second.budget;
    CountOptions copt;
    copt.threads = opt.threads;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        it->second.run(o, copt);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget > 0 && r.seconds > r.budget) {
        o.require(false, "runtime " + std::to_string(r.seconds) + " s exceeds " + std::to_string(r.budget) + " s");
    }
    r.ok = o.ok;
    r.detail = o.detail.str();
    return r;
}

std::vector<int> suite_members(const std::string& name) {
    if (name == "all") {
        std::vector<int> ids;
        for (const auto& [id, def] : criteria()) ids.push_back(id);
        return ids;
    }
    if (auto it = aliases().find(name); it != aliases().end()) return it->second;
    try {
        size_t pos = 0;
        int id = std::stoi(name, &pos);
        if (pos == name.size() && criteria().count(id)) return {id};
    } catch (const std::exception&) {
    }
    throw UnknownNameError("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out{"all"};
    for (const auto& [name, ids] : aliases()) out.push_back(name);
    for (const auto& [id, def] : criteria()) out.push_back(std::to_string(id));
    return out;
}

std::vector<CriterionResult> run_suite(const std::string& name, const AcceptanceOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id : suite_members(name)) out.push_back(run_criterion(id, opt));
    return out;
}

}  // namespace subzeta
