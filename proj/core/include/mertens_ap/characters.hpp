#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mertens_ap {

inline constexpr std::int64_t kDefaultCharacterCap = 1'000'000;

// One cyclic factor of (Z/q)* in the CRT decomposition.
struct GroupComponent {
    std::int64_t p = 0;        // prime
    std::int64_t modulus = 1;  // p^k
    std::int64_t generator = 1;
    std::int64_t order = 1;
    std::vector<std::int32_t> dlog;  // indexed by n mod modulus, -1 off units
};

struct UnitGroup {
    std::int64_t q = 1;
    std::int64_t phi = 1;
    std::int64_t exponent = 1;  // lcm of component orders
    std::vector<GroupComponent> components;

    // Discrete-log coordinates of n, or empty when gcd(n,q) > 1.
    bool coordinates(std::int64_t n, std::vector<std::int64_t>& out) const;
};

std::shared_ptr<const UnitGroup> unit_group(std::int64_t q);

class DirichletCharacter {
public:
    DirichletCharacter() = default;
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> label);

    std::int64_t modulus() const { return group_->q; }
    const std::vector<std::int64_t>& label() const { return label_; }
    std::string label_string() const;
    std::int64_t order() const { return order_; }
    std::int64_t conductor() const { return conductor_; }
    int kappa() const { return kappa_; }
    const UnitGroup& group() const { return *group_; }

    bool is_principal() const { return order_ == 1; }
    bool is_primitive() const { return conductor_ == group_->q; }
    bool is_real() const { return order_ <= 2; }

    // e with χ(n) = exp(2πi e/order), or -1 when χ(n) = 0.
    std::int64_t exponent(std::int64_t n) const;
    // Same value expressed over the group exponent E.
    std::int64_t exponent_over_group(std::int64_t n) const;
    std::complex<double> value(std::int64_t n) const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::int64_t> label_;
    std::int64_t order_ = 1;
    std::int64_t conductor_ = 1;
    int kappa_ = 0;
};

std::vector<DirichletCharacter> character_group(std::int64_t q,
                                                std::int64_t cap = kDefaultCharacterCap);

// Parses "q:e1,...,ek".
DirichletCharacter character_from_label(const std::string& text);

DirichletCharacter inducing_primitive(const DirichletCharacter& chi);

// Exact value of Σ_k c_k ζ_E^k when it is rational; throws otherwise.
std::int64_t exact_root_sum(const std::vector<std::int64_t>& histogram);

// (1/φ(q)) Σ_χ χ(n) conj χ(a) in floating point.
std::complex<double> orthogonality_sum(std::int64_t q, std::int64_t n, std::int64_t a);
// Σ_χ χ(n) conj χ(a) evaluated exactly over cyclotomic integers.
std::int64_t orthogonality_sum_exact(std::int64_t q, std::int64_t n, std::int64_t a);
// Σ_{n mod q} χ(n) conj ψ(n), exactly.
std::int64_t character_inner_product_exact(const DirichletCharacter& chi,
                                           const DirichletCharacter& psi);

}  // namespace mertens_ap
