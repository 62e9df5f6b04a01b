#include "subzeta/catalog.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <tuple>

namespace subzeta {

namespace {

GeneratorSetup adjoint_setup(const LieLattice& l, const std::vector<int>& gens, std::string name) {
    GeneratorSetup g;
    g.rank = l.rank();
    g.basis_labels = l.labels();
    g.name = std::move(name);
    std::vector<IntMat> ad = adjoint_generators(l);
    for (int k : gens) {
        g.generators.push_back(ad[k]);
        g.generator_labels.push_back("ad(" + l.labels()[k] + ")");
    }
    return g;
}

std::vector<int> counts_by_level(const std::vector<int>& sorted_levels) {
    std::vector<int> g;
    for (int lv : sorted_levels) {
        if (static_cast<int>(g.size()) < lv) g.resize(lv, 0);
        ++g[lv - 1];
    }
    return g;
}

int parse_int(const std::string& s, const std::string& whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
        throw UnknownNameError("bad parameter in algebra name '" + whole + "'");
    return v;
}

std::string pair_label(int i, int j) {
    if (i < 10 && j < 10) return "x" + std::to_string(i) + std::to_string(j);
    return "x" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

EndoSetup heisenberg() {
    BracketTable t(3);
    t.set(0, 1, 2, 1);
    GeneratorSetup g = adjoint_setup(t.build({"x", "y", "z"}), {0, 1}, "heisenberg");
    g.grading = std::vector<int>{2, 1};
    return EndoSetup(std::move(g));
}

EndoSetup fil4() {
    // basis z, x1, x2, x3, x4
    BracketTable t(5);
    t.set(0, 1, 2, 1);
    t.set(0, 2, 3, 1);
    t.set(0, 3, 4, 1);
    t.set(1, 2, 4, 1);
    GeneratorSetup g = adjoint_setup(t.build({"z", "x1", "x2", "x3", "x4"}), {0, 1}, "fil4");
    g.grading = std::vector<int>{2, 1, 1, 1};
    g.note = "the relations as given yield class 4";
    return EndoSetup(std::move(g));
}

EndoSetup g66() {
    BracketTable t(6);
    t.set(0, 1, 3, 1);
    t.set(0, 2, 4, 1);
    t.set(0, 3, 5, 1);
    t.set(1, 2, 5, 1);
    GeneratorSetup g = adjoint_setup(t.build({"x1", "x2", "x3", "x4", "x5", "x6"}), {0, 1, 2}, "g66");
    g.grading = std::vector<int>{2, 2, 2};
    return EndoSetup(std::move(g));
}

EndoSetup abelian(int n) {
    if (n < 1) fail_precondition("abelian rank must be positive");
    GeneratorSetup g;
    g.rank = n;
    g.name = "Z^" + std::to_string(n);
    g.grading = std::vector<int>{n};
    return EndoSetup(std::move(g));
}

EndoSetup l_lambda(const Partition& lambda) {
    if (lambda.length() == 0) throw InvalidPartitionError("empty partition");
    int c = lambda.largest();
    // (level, i, j) with x0 as (1, 0, 0)
    std::vector<std::tuple<int, int, int>> elems{{1, 0, 0}};
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) elems.emplace_back(c - lambda[i - 1] + j, i, j);
    std::stable_sort(elems.begin(), elems.end());
    int n = static_cast<int>(elems.size());
    std::map<std::pair<int, int>, int> pos;
    std::vector<std::string> labels;
    std::vector<int> levels;
    for (int k = 0; k < n; ++k) {
        auto [lv, i, j] = elems[k];
        pos[{i, j}] = k;
        labels.push_back(i == 0 ? "x0" : pair_label(i, j));
        levels.push_back(lv);
    }
    BracketTable t(n);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j < lambda[i - 1]; ++j) t.set(pos[{0, 0}], pos[{i, j}], pos[{i, j + 1}], 1);
    std::vector<int> gens{pos[{0, 0}]};
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda[i - 1] >= 2) gens.push_back(pos[{i, 1}]);
    if (c == 1) gens.clear();
    GeneratorSetup g = adjoint_setup(t.build(labels), gens, "L_" + lambda.to_string());
    if (near_rectangle(lambda)) g.grading = counts_by_level(levels);
    return EndoSetup(std::move(g));
}

EndoSetup maximal_class(int c) {
    if (c < 1) fail_precondition("class must be positive");
    return l_lambda(Partition({c}));
}

EndoSetup grenham(int r) {
    if (r < 1) fail_precondition("Grenham parameter must be positive");
    return l_lambda(Partition(std::vector<int>(r, 2)));
}

EndoSetup m_f(const Partition& f) {
    int n = f.size();
    if (n == 0) throw InvalidPartitionError("empty partition");
    GeneratorSetup g;
    g.rank = 2 * n;
    g.name = "m_" + f.to_string();
    int start = 0;
    for (int b = 0; b < f.length(); ++b) {
        for (int a = start; a < start + f[b]; ++a)
            for (int c = start; c < start + f[b]; ++c) {
                IntMat m(2 * n, 2 * n);
                m(a, n + c) = 1;
                g.generators.push_back(m);
                g.generator_labels.push_back("E(" + std::to_string(a + 1) + "," + std::to_string(n + c + 1) + ")");
            }
        start += f[b];
    }
    g.grading = std::vector<int>{n, n};
    return EndoSetup(std::move(g));
}

EndoSetup u_lambda(const Partition& lambda) {
    int n = lambda.size();
    if (n == 0) throw InvalidPartitionError("empty partition");
    int c = lambda.largest();
    std::vector<std::tuple<int, int, int>> elems;  // (level, block, position)
    for (int b = 1; b <= lambda.length(); ++b)
        for (int p = 1; p <= lambda[b - 1]; ++p) elems.emplace_back(c - lambda[b - 1] + p, b, p);
    std::stable_sort(elems.begin(), elems.end());
    std::map<std::pair<int, int>, int> pos;
    GeneratorSetup g;
    g.rank = n;
    g.name = "u_" + lambda.to_string();
    std::vector<int> levels;
    for (int k = 0; k < n; ++k) {
        auto [lv, b, p] = elems[k];
        pos[{b, p}] = k;
        levels.push_back(lv);
        g.basis_labels.push_back("e" + std::to_string(b) + "_" + std::to_string(p));
    }
    for (int b = 1; b <= lambda.length(); ++b)
        for (int p = 1; p < lambda[b - 1]; ++p) {
            IntMat m(n, n);
            m(pos[{b, p}], pos[{b, p + 1}]) = 1;
            g.generators.push_back(m);
            g.generator_labels.push_back("E(" + g.basis_labels[pos[{b, p}]] + "," + g.basis_labels[pos[{b, p + 1}]] + ")");
        }
    g.grading = counts_by_level(levels);
    return EndoSetup(std::move(g));
}

EndoSetup free_nilpotent(int c, int d) {
    FreeNilpotent f = free_nilpotent_lattice(c, d);
    std::vector<int> gens;
    for (int k = 0; k < d; ++k) gens.push_back(k);
    GeneratorSetup g = adjoint_setup(f.lattice, gens, "f_" + std::to_string(c) + "," + std::to_string(d));
    g.grading = counts_by_level(f.weights);
    return EndoSetup(std::move(g));
}

EndoSetup lookup(const std::string& name) {
    size_t colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    auto need_arg = [&] {
        if (arg.empty()) throw UnknownNameError("algebra '" + head + "' needs a parameter, e.g. " + head + ":2");
    };
    auto no_arg = [&] {
        if (colon != std::string::npos) throw UnknownNameError("algebra '" + head + "' takes no parameter");
    };
    if (head == "heisenberg") return no_arg(), heisenberg();
    if (head == "fil4") return no_arg(), fil4();
    if (head == "g66") return no_arg(), g66();
    if (head == "abelian") return need_arg(), abelian(parse_int(arg, name));
    if (head == "l") return need_arg(), l_lambda(Partition::parse(arg));
    if (head == "maximal") return need_arg(), maximal_class(parse_int(arg, name));
    if (head == "grenham") return need_arg(), grenham(parse_int(arg, name));
    if (head == "mf") return need_arg(), m_f(Partition::parse(arg));
    if (head == "u") return need_arg(), u_lambda(Partition::parse(arg));
    if (head == "free") {
        need_arg();
        size_t comma = arg.find(',');
        if (comma == std::string::npos) throw UnknownNameError("free needs c,d as in free:2,3");
        return free_nilpotent(parse_int(arg.substr(0, comma), name), parse_int(arg.substr(comma + 1), name));
    }
    throw UnknownNameError("unknown algebra '" + name + "'");
}

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"heisenberg", "Heisenberg Lie ring, rank 3, class 2"},
        {"fil4", "filiform Lie ring of rank 5 with [x1,x2]=x4; Condition fails"},
        {"g66", "rank 6 Lie ring; Condition fails on ad(x3)"},
        {"abelian:n", "Z^n with no operators"},
        {"l:LAMBDA", "L_lambda: x0 acting on Jordan chains of lengths lambda"},
        {"maximal:c", "maximal class Lie ring M_c = L_(c)"},
        {"grenham:r", "Grenham Lie ring L_(2^r)"},
        {"mf:F", "matrix algebra m_f of rank 2|f| acting by block units"},
        {"u:LAMBDA", "strictly upper triangular block matrices u_lambda"},
        {"free:c,d", "free nilpotent Lie ring of class c on d generators (rank <= 30)"},
    };
}

}  // namespace subzeta
