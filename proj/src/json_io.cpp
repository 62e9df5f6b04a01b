#include "subzeta/json_io.hpp"

#include "subzeta/errors.hpp"

#include <fstream>
#include <sstream>

namespace subzeta {

namespace {

Json integer_json(const mpz_class& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class x;
        if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string " + j.dump());
        return x;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json terms_json(const Poly2& p) {
    Json arr = Json::array();
    for (int b = 0; b <= p.deg_t(); ++b)
        for (int a = 0; a <= p.coeff_t(b).degree(); ++a) {
            mpq_class c = p.coeff(a, b);
            if (c == 0) continue;
            arr.push_back({integer_json(c.get_num()), integer_json(c.get_den()), a, b});
        }
    return arr;
}

Poly2 terms_from_json(const Json& arr) {
    if (!arr.is_array()) throw ParseError("polynomial terms must be an array");
    Poly2 p;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 4) throw ParseError("term must be [c_num, c_den, dq, dt]");
        mpz_class num = integer_from_json(t[0]), den = integer_from_json(t[1]);
        if (den == 0) throw ParseError("zero coefficient denominator");
        if (!t[2].is_number_integer() || !t[3].is_number_integer()) throw ParseError("exponents must be integers");
        long a = t[2].get<long>(), b = t[3].get<long>();
        if (a < 0 || b < 0 || a > 100000 || b > 100000) throw ParseError("exponents out of range");
        mpq_class c(num, den);
        c.canonicalize();
        p += Poly2::monomial(c, static_cast<int>(a), static_cast<int>(b));
    }
    return p;
}

IntMat matrix_from_json(const Json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("generator matrix must have rank rows");
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) throw ParseError("generator row has wrong length");
        for (int k = 0; k < n; ++k) m(i, k) = integer_from_json(j[i][k]);
    }
    return m;
}

int index_from_json(const Json& j, int n) {
    if (!j.is_number_integer()) throw ParseError("index must be an integer");
    long i = j.get<long>();
    if (i < 1 || i > n) throw ParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    return static_cast<int>(i) - 1;
}

Json terms_json(const QPoly& p) {
    Json arr = Json::array();
    for (int b = 0; b <= p.degree(); ++b)
        if (p[b] != 0) arr.push_back({integer_json(p[b].get_num()), integer_json(p[b].get_den()), 0, b});
    return arr;
}

}  // namespace

Json rational_json(const mpq_class& x) {
    if (x.get_den() == 1) return integer_json(x.get_num());
    return Json(x.get_str());
}

Json to_json(const RatFun1& f) { return {{"num", terms_json(f.num())}, {"den", terms_json(f.den())}}; }

// Sign chosen so that a nonzero constant term of the denominator is positive.
Json to_json(const RatFun2& f) {
    if (sgn(f.den().coeff(0, 0)) < 0) return {{"num", terms_json(-f.num())}, {"den", terms_json(-f.den())}};
    return {{"num", terms_json(f.num())}, {"den", terms_json(f.den())}};
}

RatFun2 ratfun_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("rational function needs num and den");
    Poly2 den = terms_from_json(j["den"]);
    if (den.is_zero()) throw ParseError("denominator is zero");
    return RatFun2(terms_from_json(j["num"]), den);
}

Json to_json(const FEShape& s) { return {{"sign", s.sign}, {"qexp", s.qexp}, {"texp", s.texp}}; }

FEShape parse_fe_shape(const std::string& s) {
    std::istringstream in(s);
    FEShape f;
    char c1 = 0, c2 = 0;
    if (!(in >> f.sign >> c1 >> f.qexp >> c2 >> f.texp) || c1 != ',' || c2 != ',' || (f.sign != 1 && f.sign != -1))
        throw ParseError("shape must be 'sign,qexp,texp' with sign +-1, got '" + s + "'");
    std::string rest;
    if (in >> rest) throw ParseError("trailing characters in shape '" + s + "'");
    return f;
}

Json counts_json(const std::string& algebra, long p, const std::vector<std::uint64_t>& counts) {
    Json arr = Json::array();
    for (size_t k = 0; k < counts.size(); ++k) arr.push_back({k, counts[k]});
    return {{"algebra", algebra}, {"p", p}, {"counts", arr}};
}

EndoSetup endo_setup_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra definition must be an object");
    if (!j.contains("rank") || !j["rank"].is_number_integer()) throw ParseError("algebra definition needs an integer rank");
    int n = j["rank"].get<int>();
    if (n < 1 || n > 64) throw ParseError("rank must lie in 1..64");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        if (static_cast<int>(labels.size()) != n) throw ParseError("label count differs from rank");
    }
    BracketTable table(n);
    bool has_brackets = j.contains("brackets");
    if (has_brackets) {
        for (const auto& b : j["brackets"]) {
            if (!b.is_array() || b.size() != 3 || !b[2].is_array())
                throw ParseError("bracket entries must be [i, j, [[k, c], ...]]");
            int a = index_from_json(b[0], n), c = index_from_json(b[1], n);
            if (a == c) throw ParseError("bracket of an element with itself must be omitted");
            for (const auto& kc : b[2]) {
                if (!kc.is_array() || kc.size() != 2 || !kc[1].is_number_integer())
                    throw ParseError("bracket terms must be [k, c]");
                table.set(a, c, index_from_json(kc[0], n), kc[1].get<long>());
            }
        }
    }
    GeneratorSetup g;
    g.rank = n;
    g.name = j.value("name", std::string("custom"));
    const Json gens = j.contains("generators") ? j["generators"] : Json("adjoint");
    if (gens.is_string()) {
        if (gens.get<std::string>() != "adjoint") throw ParseError("generators must be \"adjoint\" or a list");
        if (!has_brackets) throw ParseError("adjoint generators need brackets");
        LieLattice l = table.build(labels);
        std::vector<IntMat> ad = adjoint_generators(l);
        g.basis_labels = l.labels();
        for (int k = 0; k < n; ++k)
            if (!ad[k].is_zero()) {
                g.generators.push_back(ad[k]);
                g.generator_labels.push_back("ad(" + l.labels()[k] + ")");
            }
    } else if (gens.is_array()) {
        g.basis_labels = labels;
        std::vector<IntMat> ad;
        if (has_brackets) ad = adjoint_generators(table.build(labels));
        for (const auto& x : gens) {
            if (x.is_number_integer()) {
                if (!has_brackets) throw ParseError("generator indices need brackets");
                int k = index_from_json(x, n);
                g.generators.push_back(ad[k]);
                g.generator_labels.push_back("ad(" + (labels.empty() ? "e" + std::to_string(k + 1) : labels[k]) + ")");
            } else {
                g.generators.push_back(matrix_from_json(x, n));
                g.generator_labels.push_back("C" + std::to_string(g.generators.size()));
            }
        }
    } else {
        throw ParseError("generators must be \"adjoint\" or a list");
    }
    if (j.contains("grading")) {
        std::vector<int> gr;
        for (const auto& x : j["grading"]) {
            if (!x.is_number_integer()) throw ParseError("grading entries must be integers");
            gr.push_back(x.get<int>());
        }
        g.grading = gr;
    }
    return EndoSetup(std::move(g));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace subzeta
