#pragma once

#include "solvable/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solvable {

struct SeedSpec {
    enum class Kind { Eigenstate, VirtualI, VirtualII, PseudoVirtual, Overshoot };
    Kind kind = Kind::Eigenstate;
    int index = 0;

    static SeedSpec eigen(int n) { return {Kind::Eigenstate, n}; }
    static SeedSpec virtual1(int v) { return {Kind::VirtualI, v}; }
    static SeedSpec virtual2(int v) { return {Kind::VirtualII, v}; }
    static SeedSpec pseudo(int v) { return {Kind::PseudoVirtual, v}; }
    static SeedSpec overshoot(int v) { return {Kind::Overshoot, v}; }
    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

std::string seed_name(const SeedSpec& s);
// "eigen:2", "virtI:1", "virtII:0", "pseudo:3", "overshoot:4"
SeedSpec parse_seed(const std::string& text);

enum class SeedClass { Eigen, TypeI, TypeII, Pseudo, Free, Unclassified, BoundaryDegenerate };
const char* seed_class_name(SeedClass c);

struct SeedFunction {
    SeedSpec spec;
    Poly xi;                 // polynomial part in eta
    PrefactoredFunction fn;  // full seed as a function of eta
    Rational energy;
    SeedClass classification = SeedClass::Unclassified;
};

SeedFunction make_seed(const ModelSystem& sys, const SeedSpec& spec);
SeedClass classify_seed(const SeedFunction& seed, const ModelSystem& sys);

// num/den as functions of eta.
struct DeformedState {
    PrefactoredFunction num, den;
    Rational energy;
    RatFunc log_derivative() const { return num.log_derivative() - den.log_derivative(); }
    LogValue eval(const BasisLogs& at) const;
};

class DeformedSystem {
public:
    DeformedSystem(ModelSystem base, std::vector<SeedFunction> seeds, bool unsafe);

    const ModelSystem& base() const { return base_; }
    const std::vector<SeedFunction>& seeds() const { return seeds_; }
    const PrefactoredFunction& denominator() const { return denom_; }  // W_x[seeds]
    const RatFunc& potential_delta() const { return delta_; }
    RatFunc potential() const { return base_.potential() + delta_; }
    const ModelParams& shifted_params() const { return shifted_; }
    void set_shifted_params(ModelParams p) { shifted_ = std::move(p); }
    bool unsafe() const { return unsafe_; }

    // Stripped polynomial part of the denominator Wronskian.
    Poly denominator_poly() const { return denom_.poly(); }

    // W[seeds, phi_n] / W[seeds].
    DeformedState state(int n) const;
    // W[seeds without j] / W[seeds], the state created at the energy of seed j.
    DeformedState seed_state(std::size_t j) const;

    // Exact Schroedinger residual of a state against the deformed potential.
    RatFunc residual(const DeformedState& s) const;

private:
    ModelSystem base_;
    std::vector<SeedFunction> seeds_;
    PrefactoredFunction denom_;
    RatFunc delta_;
    ModelParams shifted_;
    bool unsafe_;
};

DeformedSystem deform_system(const ModelSystem& sys, const std::vector<SeedSpec>& seeds, bool unsafe = false);

struct NonsingularVerdict {
    bool nonsingular = false;
    int interior_roots = 0;
    std::string detail;
};
NonsingularVerdict certify_nonsingular(const DeformedSystem& sys);

struct CrumReport {
    DeformedSystem system;
    bool potential_matches = false;
    std::vector<Rational> state_constants;  // Wronskian ratio / iterated A, for n = s..s+3
};
CrumReport crum_tower(const ModelSystem& sys, int s);

// First m >= 0 violating prod_j (m - d_j) >= 0, if any.
std::optional<int> adler_violation(const std::vector<int>& D);

struct KreinAdlerResult {
    DeformedSystem system;
    int mu = 0;                 // new ground-state label
    std::vector<int> deleted;   // sorted D
    Rational norm_ratio(int n) const;  // prod_j (E(n) - E(d_j))
};
KreinAdlerResult krein_adler(const ModelSystem& sys, const std::vector<int>& D, bool unsafe = false);

}  // namespace solvable
