#pragma once

#include "subzeta/intmat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subzeta {

// Lie ring Z^n with bracket [e_i, e_j] = sum_k c(i, j, k) e_k.
class LieLattice {
public:
    // Validates antisymmetry and the Jacobi identity.
    LieLattice(int rank, std::vector<long> constants, std::vector<std::string> labels = {});

    int rank() const { return n_; }
    long constant(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<mpz_class> bracket(const std::vector<mpz_class>& u, const std::vector<mpz_class>& v) const;

private:
    int n_;
    std::vector<long> c_;
    std::vector<std::string> labels_;
};

// Builder for sparse structure constants; set(i, j, k, c) also records [e_j, e_i] = -c e_k.
class BracketTable {
public:
    explicit BracketTable(int rank) : n_(rank), c_(static_cast<size_t>(rank) * rank * rank, 0) {}
    void set(int i, int j, int k, long c);
    LieLattice build(std::vector<std::string> labels = {}) const;

private:
    int n_;
    std::vector<long> c_;
};

// Row i of the k-th matrix holds the coordinates of [e_i, e_k].
std::vector<IntMat> adjoint_generators(const LieLattice& l);

struct GeneratorSetup {
    int rank = 0;
    std::vector<IntMat> generators;
    std::vector<std::string> generator_labels;
    std::vector<std::string> basis_labels;
    std::optional<std::vector<int>> grading;  // block sizes n_1..n_c
    std::string name;
    std::string note;
};

// Z-span of a set of nilpotent operators with a distinguished basis; validates shapes and nilpotency.
class EndoSetup {
public:
    explicit EndoSetup(GeneratorSetup g);

    int rank() const { return s_.rank; }
    const std::vector<IntMat>& generators() const { return s_.generators; }
    const std::vector<std::string>& generator_labels() const { return s_.generator_labels; }
    const std::vector<std::string>& basis_labels() const { return s_.basis_labels; }
    const std::optional<std::vector<int>>& grading() const { return s_.grading; }
    const std::string& name() const { return s_.name; }
    const std::string& note() const { return s_.note; }

    // Same operators expressed in the basis given by the rows of u; grading dropped.
    EndoSetup rebased(const IntMat& u) const;

private:
    GeneratorSetup s_;
};

struct CentralData {
    int c = 0;                  // nilpotency class
    std::vector<IntMat> z;      // saturated HNF bases of Z_0 = 0, ..., Z_c = L
    std::vector<int> z_ranks;
    std::vector<int> coranks;   // N_0..N_c with N_i = rank(L / Z_i)
};

CentralData centralizer_series(const EndoSetup& e);
// Unimodular u whose rows from N_i on span Z_i for each i.
IntMat cocentral_basis(const EndoSetup& e, const CentralData& cd);
IntMat cocentral_basis(const EndoSetup& e);

struct Violation {
    int generator = 0;   // 1-based
    int block_row = 0;   // 1-based blocks
    int block_col = 0;
    int row = 0;         // 1-based basis indices
    int col = 0;
    mpz_class entry;
};

struct ConditionVerdict {
    bool ok = false;
    std::optional<Violation> violation;
};

// Throws GradingError if the grading is absent or disagrees with the centralizer series.
ConditionVerdict check_condition(const EndoSetup& e);

// 1-based block index of each basis position.
std::vector<int> block_of_position(const std::vector<int>& grading);

// N_0..N_c of the free nilpotent Lie ring of class c on d generators.
std::vector<std::int64_t> witt_ranks(int c, int d);

struct FreeNilpotent {
    LieLattice lattice;
    std::vector<int> weights;
    std::vector<std::string> words;
};
// Lyndon basis ordered by weight; throws PreconditionError above rank 30.
FreeNilpotent free_nilpotent_lattice(int c, int d);

}  // namespace subzeta
