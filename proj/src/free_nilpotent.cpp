#include "subzeta/algebras.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <map>

namespace subzeta {

namespace {

using Word = std::string;                 // letters '0' + generator index
using AssocPoly = std::map<Word, long>;   // element of the free associative ring

// All Lyndon words of length <= c over d letters, by Duval's generation (lex order).
std::vector<Word> lyndon_words(int c, int d) {
    std::vector<Word> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        Word s;
        for (int x : w) s.push_back(static_cast<char>('0' + x));
        out.push_back(s);
        size_t m = w.size();
        while (static_cast<int>(w.size()) < c) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == d - 1) w.pop_back();
    }
    return out;
}

bool is_lyndon(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w.substr(i) <= w) return false;
    return true;
}

void add_into(AssocPoly& a, const AssocPoly& b, long f) {
    for (const auto& [w, c] : b) {
        long& x = a[w];
        x += f * c;
        if (x == 0) a.erase(w);
    }
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly r;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            long& s = r[u + v];
            s += x * y;
            if (s == 0) r.erase(u + v);
            long& t = r[v + u];
            t -= x * y;
            if (t == 0) r.erase(v + u);
        }
    return r;
}

}  // namespace

FreeNilpotent free_nilpotent_lattice(int c, int d) {
    if (c < 1 || d < 1) fail_precondition("free nilpotent ring needs c >= 1 and d >= 1");
    std::vector<std::int64_t> n = witt_ranks(c, d);
    if (n[0] > 30) fail_precondition("free nilpotent ring of rank " + std::to_string(n[0]) + " exceeds 30");
    std::vector<Word> words = lyndon_words(c, d);
    std::stable_sort(words.begin(), words.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    int rank = static_cast<int>(words.size());
    std::map<Word, int> index;
    for (int i = 0; i < rank; ++i) index[words[i]] = i;

    // Standard bracketing: w = uv with v the longest proper Lyndon suffix.
    std::vector<AssocPoly> expansion(rank);
    std::vector<std::string> labels(rank);
    for (int i = 0; i < rank; ++i) {
        const Word& w = words[i];
        if (w.size() == 1) {
            expansion[i][w] = 1;
            labels[i] = "x" + std::to_string(w[0] - '0' + 1);
            continue;
        }
        size_t split = 1;
        while (!is_lyndon(w.substr(split))) ++split;
        int u = index.at(w.substr(0, split)), v = index.at(w.substr(split));
        expansion[i] = commutator(expansion[u], expansion[v]);
        labels[i] = "[" + labels[u] + "," + labels[v] + "]";
    }

    BracketTable table(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            if (words[i].size() + words[j].size() > static_cast<size_t>(c)) continue;
            AssocPoly e = commutator(expansion[i], expansion[j]);
            // The smallest word of a Lie element is Lyndon and leads its basis element.
            while (!e.empty()) {
                auto [w, coef] = *e.begin();
                auto it = index.find(w);
                if (it == index.end()) throw Error("Lyndon reduction met a non-basis word " + w);
                table.set(i, j, it->second, coef);
                add_into(e, expansion[it->second], -coef);
            }
        }
    FreeNilpotent out{table.build(labels), {}, {}};
    for (const auto& w : words) {
        out.weights.push_back(static_cast<int>(w.size()));
        std::string s;
        for (char ch : w) s += "x" + std::to_string(ch - '0' + 1);
        out.words.push_back(s);
    }
    return out;
}

}  // namespace subzeta
