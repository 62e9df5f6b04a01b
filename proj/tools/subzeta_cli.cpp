#include "subzeta/acceptance.hpp"
#include "subzeta/catalog.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/formulas.hpp"
#include "subzeta/funeq.hpp"
#include "subzeta/json_io.hpp"
#include "subzeta/lattice_enum.hpp"
#include "subzeta/reduced.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace subzeta;

namespace {

struct Formula {
    std::string name;
    RatFun2 value;
    FEShape shape;
    int rank = 0;
    std::vector<std::int64_t> coranks;
};

Formula make_formula(const std::string& name, int n) {
    if (n < 1) throw PreconditionError("--n must be at least 1");
    if (name == "c1") return {name, zeta_c1(n), fe_shape_main(n, {n}), n, {n}};
    if (name == "abelian-inert") {
        if (n > 4) throw PreconditionError("abelian-inert is limited to n <= 4");
        return {name, zeta_abelian_inert(n), fe_shape_abelian(n), 2 * n, {2 * n, n}};
    }
    throw UnknownNameError("unknown formula '" + name + "' (known: c1, abelian-inert)");
}

Json poly_json(const QPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_json(c));
    return arr;
}

EndoSetup load_algebra(const std::string& name, const std::string& file) {
    if (!file.empty()) return endo_setup_from_json(read_json_file(file));
    if (name.empty()) throw PreconditionError("give an algebra name or --file");
    return lookup(name);
}

std::string display_name(const EndoSetup& e, const std::string& name) { return name.empty() ? e.name() : name; }

Json matrix_json(const IntMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).fits_slong_p() ? Json(m(i, j).get_si()) : Json(m(i, j).get_str()));
        rows.push_back(r);
    }
    return rows;
}

Json condition_json(const EndoSetup& e) {
    if (!e.grading()) return {{"status", "no grading"}};
    ConditionVerdict v;
    try {
        v = check_condition(e);
    } catch (const GradingError& err) {
        return {{"status", "grading inconsistent"}, {"message", err.what()}};
    }
    if (v.ok) return {{"status", "ok"}};
    const Violation& w = *v.violation;
    return {{"status", "violated"},
            {"witness",
             {{"generator", w.generator},
              {"generator_label", e.generator_labels().at(w.generator - 1)},
              {"block", {w.block_row, w.block_col}},
              {"entry", {w.row, w.col}},
              {"value", w.entry.get_str()}}}};
}

Json catalog_json() {
    const std::vector<std::pair<std::string, std::string>> samples{
        {"heisenberg", "heisenberg"}, {"fil4", "fil4"},       {"g66", "g66"},
        {"abelian:n", "abelian:3"},   {"l:LAMBDA", "l:3,2"},  {"maximal:c", "maximal:4"},
        {"grenham:r", "grenham:2"},   {"mf:F", "mf:2,1"},     {"u:LAMBDA", "u:2,1"},
        {"free:c,d", "free:3,2"},
    };
    Json arr = Json::array();
    for (const auto& entry : catalog_entries()) {
        std::string sample = entry.name;
        for (const auto& [pattern, s] : samples)
            if (pattern == entry.name) sample = s;
        EndoSetup e = lookup(sample);
        CentralData cd = centralizer_series(e);
        arr.push_back({{"family", entry.name},
                       {"description", entry.description},
                       {"example", sample},
                       {"rank", e.rank()},
                       {"class", cd.c},
                       {"condition", condition_json(e)["status"]}});
    }
    return {{"algebras", arr}};
}

Json info_json(const EndoSetup& e, const std::string& name) {
    CentralData cd = centralizer_series(e);
    Json j{{"algebra", display_name(e, name)},
           {"rank", e.rank()},
           {"class", cd.c},
           {"basis", e.basis_labels()},
           {"generators", e.generator_labels()},
           {"z_ranks", cd.z_ranks},
           {"coranks", cd.coranks},
           {"grading", e.grading() ? Json(*e.grading()) : Json(nullptr)},
           {"condition", condition_json(e)},
           {"cocentral_basis", matrix_json(cocentral_basis(e, cd))}};
    if (!e.note().empty()) j["note"] = e.note();
    return j;
}

Json verdict(const std::string& check, Json inputs, bool ok, Json witness) {
    Json j{{"check", check}, {"inputs", std::move(inputs)}, {"ok", ok}};
    if (!witness.is_null()) j["witness"] = std::move(witness);
    return j;
}

Json reduced_json(const Partition& lambda, int kmax) {
    ConeSeries s = hilbert_series_exact(lambda);
    ReducedFEReport fe = check_reduced_fe(lambda);
    NearRectangle nr;
    bool rect = near_rectangle(lambda, &nr);
    Json beta = Json::array();
    for (const auto& v : minimal_interior_vectors(lambda)) beta.push_back(v);
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients(kmax)) coeffs.push_back(rational_json(c));
    Json j{{"partition", lambda.parts()},
           {"series", s.exact.to_string("T")},
           {"ratfun", to_json(s.exact)},
           {"coefficients", coeffs},
           {"near_rectangle", rect},
           {"fe", fe.found ? Json{{"sign", fe.found->first}, {"k", fe.found->second}} : Json(nullptr)},
           {"fe_matches_prediction", fe.ok},
           {"beta", beta}};
    if (rect) j["decomposition"] = {{"c", nr.c}, {"r1", nr.r1}, {"r2", nr.r2}};
    return j;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation and verification of local submodule and ideal zeta functions"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "List algebra families with an example instance");

    std::string algebra, file;
    auto* info = app.add_subcommand("info", "Centralizer series, grading and condition verdict");
    info->add_option("algebra", algebra, "catalog name, e.g. heisenberg or l:3,2");
    info->add_option("--file", file, "algebra definition JSON")->check(CLI::ExistingFile);

    long p = 2;
    int kmax = 3, threads = 0;
    std::string strategy = "exhaustive";
    bool csv = false;
    auto* count = app.add_subcommand("count", "Invariant sublattice counts a_{p^0..p^K}");
    count->add_option("algebra", algebra, "catalog name");
    count->add_option("--file", file, "algebra definition JSON")->check(CLI::ExistingFile);
    count->add_option("--p", p, "prime")->required();
    count->add_option("--kmax", kmax, "largest exponent")->required()->check(CLI::Range(0, 64));
    count->add_option("--threads", threads, "worker threads (default: SUBZETA_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    count->add_option("--strategy", strategy, "exhaustive or pruned")
        ->check(CLI::IsMember({"exhaustive", "pruned"}));
    count->add_flag("--csv", csv, "CSV table with columns k,a_k");

    std::string formula;
    int n = 1;
    std::optional<long> at;
    auto* series = app.add_subcommand("series", "Closed-form zeta function and its expansion in t");
    series->add_option("formula", formula, "c1 or abelian-inert")->required();
    series->add_option("--n", n, "rank parameter")->required();
    series->add_option("--kmax", kmax, "expansion cutoff")->check(CLI::Range(0, 200));
    series->add_option("--at", at, "also evaluate the coefficients at q = this value");

    std::string shape = "auto";
    auto* funeq = app.add_subcommand("check-funeq", "Check W(1/q,1/t) = sign q^a t^b W(q,t)");
    funeq->add_option("formula", formula, "c1 or abelian-inert");
    funeq->add_option("--n", n, "rank parameter");
    funeq->add_option("--file", file, "rational function JSON")->check(CLI::ExistingFile);
    funeq->add_option("--shape", shape, "auto or sign,qexp,texp");

    std::string partition;
    auto* reduced = app.add_subcommand("reduced", "Reduced zeta function of L_lambda as a cone Hilbert series");
    reduced->add_option("partition", partition, "comma-separated descending parts")->required();
    reduced->add_option("--kmax", kmax, "number of coefficients to list")->check(CLI::Range(0, 200));

    std::string suite;
    bool json_out = false;
    auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
    verify->add_option("suite", suite, "all, 1..12, or an alias")->required();
    verify->add_option("--threads", threads, "worker threads")->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", json_out, "JSON report instead of one line per criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*catalog) {
            print(catalog_json());
        } else if (*info) {
            print(info_json(load_algebra(algebra, file), algebra));
        } else if (*count) {
            EndoSetup e = load_algebra(algebra, file);
            CountOptions opt;
            opt.threads = threads;
            opt.strategy = strategy == "pruned" ? Strategy::pruned : Strategy::exhaustive;
            auto counts = zeta_series_bruteforce(e, Prime(p), kmax, opt);
            if (csv) {
                std::cout << "k,a_k\n";
                for (size_t k = 0; k < counts.size(); ++k) std::cout << k << "," << counts[k] << "\n";
            } else {
                print(counts_json(display_name(e, algebra), p, counts));
            }
        } else if (*series) {
            Formula f = make_formula(formula, n);
            Json coeffs = Json::array();
            auto s = series_in_t(f.value, kmax);
            for (size_t k = 0; k < s.size(); ++k) {
                Json c{{"k", k}, {"poly", s[k].to_string("q")}, {"coeffs", poly_json(s[k])}};
                if (at) c["value"] = rational_json(s[k].eval(mpq_class(*at)));
                coeffs.push_back(c);
            }
            print({{"formula", f.name},
                   {"n", n},
                   {"string", f.value.to_string()},
                   {"value", to_json(f.value)},
                   {"fe_shape", to_json(f.shape)},
                   {"series", coeffs}});
        } else if (*funeq) {
            RatFun2 w;
            std::optional<FEShape> predicted;
            Json inputs;
            if (!file.empty()) {
                w = ratfun_from_json(read_json_file(file));
                inputs = {{"file", file}};
            } else {
                if (formula.empty()) throw PreconditionError("give a formula name or --file");
                Formula f = make_formula(formula, n);
                w = f.value;
                predicted = f.shape;
                inputs = {{"formula", formula}, {"n", n}};
            }
            inputs["shape"] = shape;
            std::optional<FEShape> target;
            if (shape == "auto")
                target = predicted;
            else
                target = parse_fe_shape(shape);
            bool ok;
            Json witness;
            std::optional<FEShape> found = detect_fe_shape(w);
            if (target) {
                ok = check_funeq(w, *target).ok;
                inputs["expected"] = to_json(*target);
            } else {
                ok = found.has_value();
            }
            if (found) witness = {{"found", to_json(*found)}};
            if (!ok) witness["ratio"] = check_funeq(w, FEShape{}).ratio.to_string();
            print(verdict("funeq", inputs, ok, witness));
            return ok ? 0 : 1;
        } else if (*reduced) {
            Partition lambda = Partition::parse(partition);
            print(reduced_json(lambda, kmax));
        } else if (*verify) {
            AcceptanceOptions opt;
            opt.threads = threads;
            auto ids = suite_members(suite);
            bool all_ok = true;
            Json results = Json::array();
            for (int id : ids) {
                CriterionResult r = run_criterion(id, opt);
                all_ok = all_ok && r.ok;
                if (json_out) {
                    results.push_back({{"id", r.id},
                                       {"title", r.title},
                                       {"ok", r.ok},
                                       {"seconds", r.seconds},
                                       {"budget", r.budget},
                                       {"detail", r.detail}});
                } else {
                    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << ") "
                              << r.seconds << " s: " << r.detail << std::endl;
                }
            }
            if (json_out) print({{"suite", suite}, {"ok", all_ok}, {"criteria", results}});
            return all_ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    }
    return 0;
}
