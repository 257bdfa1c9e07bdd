#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/scalar.hpp"

namespace degseq {

// Symbolic description of an objective term f (convex side) or g (concave
// side). Everything is centered: eval(spec, 0) == 0 for every variant.
// Specs are immutable values; copying is cheap.
class FunctionSpec {
public:
    enum class Kind { Power, ExpMinusOne, BaseExp, NegExp, Ratio, Linear, Conical, Hat };

    FunctionSpec() = default;  // the identity x -> x

    static FunctionSpec power(double beta);                  // x^beta, beta > 0
    static FunctionSpec exp_minus_one(double lambda);        // e^{lambda x} - 1
    static FunctionSpec base_exponential(double base, double lambda);  // base^{lambda x} - 1
    static FunctionSpec neg_exponential(double lambda);      // 1 - e^{-lambda x}
    static FunctionSpec ratio();                             // x / (x + 1)
    static FunctionSpec linear();                            // x
    static FunctionSpec conical(std::vector<std::pair<Scalar, FunctionSpec>> terms);
    // Raw hat constructor; make_hat below searches for a valid splice constant.
    static FunctionSpec hat(FunctionSpec inner, long nu, long splice_m);

    Kind kind() const { return kind_; }
    double beta() const { return p1_; }
    double lambda() const { return kind_ == Kind::BaseExp ? p2_ : p1_; }
    double base() const { return p1_; }
    long nu() const { return nu_; }
    long splice_m() const { return m_; }
    const std::vector<std::pair<Scalar, FunctionSpec>>& terms() const { return terms_; }
    const FunctionSpec& inner() const { return *inner_; }

    // true when every evaluation at a natural number is an exact rational
    bool exact_path() const;
    std::string str() const;  // mini-DSL rendering

private:
    Kind kind_ = Kind::Linear;
    double p1_ = 0.0;  // beta / lambda / base
    double p2_ = 0.0;  // lambda of base_exponential
    long nu_ = 0;
    long m_ = 0;
    std::vector<std::pair<Scalar, FunctionSpec>> terms_;
    std::shared_ptr<const FunctionSpec> inner_;
};

Scalar eval(const FunctionSpec& f, long k);
// f(k) - f(k-1), k >= 1, in cancellation-free closed form per variant
Scalar forward_difference(const FunctionSpec& f, long k);

struct ConditionFailure {
    std::string condition;
    long k = 0;
    long double lhs = 0.0L;
    long double rhs = 0.0L;
};

struct ConditionTie {
    std::string condition;
    long k = 0;
};

struct ConditionCheck {
    bool ok = true;
    long checked_up_to = 0;
    std::optional<ConditionFailure> first_failure;
    std::vector<ConditionTie> ties;       // boundary equalities / near-ties on >= conditions
    std::optional<long> overflow_at;      // numeric range exhausted before K
};

// f(k+2)-f(k+1) > f(k+1)-f(k) for 0 <= k <= K-2 (reversed when negated)
ConditionCheck check_condition_1(const FunctionSpec& f, long K,
                                 long double tau = kDefaultTau, bool negated = false);
// (k-2) f(k) >= k (f(k-1) - f(1)) for 3 <= k <= K
ConditionCheck check_condition_2(const FunctionSpec& f, long K, long double tau = kDefaultTau);
// g(k) >= 2k (g(k+1) - g(k)) for 0 <= k <= K
ConditionCheck check_condition_7(const FunctionSpec& g, long K, long double tau = kDefaultTau);
ConditionCheck check_strictly_increasing(const FunctionSpec& g, long K);

struct ClassReport {
    char which = 'F';  // 'F' or 'G'
    bool centered_ok = true;
    bool condition_1_ok = true;  // for 'G' this is condition (1) applied to -g
    bool condition_2_ok = true;
    bool condition_7_ok = true;
    bool strictly_increasing_ok = true;
    long checked_up_to = 0;
    std::optional<ConditionFailure> first_failure;
    std::vector<ConditionTie> ties;
    std::optional<long> overflow_at;

    bool member() const {
        return centered_ok && condition_1_ok && condition_2_ok && condition_7_ok &&
               strictly_increasing_ok;
    }
};

// Finite-range verification ("up to K"), not a proof.
ClassReport in_class_F(const FunctionSpec& f, long K = 10000, long double tau = kDefaultTau);
ClassReport in_class_G(const FunctionSpec& g, long K = 10000, long double tau = kDefaultTau);

// Both slope inequalities for x1 < x2 < x3 (cross-multiplied, no division).
bool check_three_slopes(const FunctionSpec& f, long x1, long x2, long x3,
                        long double tau = kDefaultTau);

// Splice g into a member of class F: mirror of g below nu, steep exponential
// above. Picks the smallest splice constant M that satisfies conditions (1)
// and (2) across the splice points. Throws std::runtime_error if no
// M <= m_max works and std::domain_error when g is not a catalog concave
// variant or nu < 3.
FunctionSpec make_hat(const FunctionSpec& g, long nu, long m_max = 1000000);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Mini-DSL: pow:<beta> | exp:<lambda> | negexp:<lambda> | ratio | lin
//         | lc:<c1>*<spec1>+<c2>*<spec2>+... | hat:<spec>@<nu>
FunctionSpec parse_function(const std::string& text);

}  // namespace degseq
