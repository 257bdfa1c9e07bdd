#include "degseq/functions.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace degseq {

namespace {

bool integral_exponent(double beta) {
    return beta > 0 && beta <= 60 && beta == std::floor(beta);
}

// shortest decimal text that parses back to exactly v
std::string format_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// decimal rendering of an exact rational when its denominator is 10^k
std::optional<std::string> rational_decimal(const Rational& r) {
    if (r.is_integer()) return r.str();
    Rational::Int den = r.den();
    int tens = 0;
    while (den % 10 == 0) {
        den /= 10;
        ++tens;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++tens;  // will be padded via scaling below
    }
    while (den % 2 == 0) {
        den /= 2;
        ++tens;
    }
    if (den != 1) return std::nullopt;
    // scale numerator to denominator 10^tens
    Rational scaled = r * Rational::pow_int(10, tens);
    if (!scaled.is_integer()) return std::nullopt;
    std::string digits = scaled.str();
    bool neg = !digits.empty() && digits[0] == '-';
    std::string body = neg ? digits.substr(1) : digits;
    while (static_cast<int>(body.size()) <= tens) body.insert(body.begin(), '0');
    body.insert(body.size() - tens, ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return (neg ? "-" : "") + body;
}

}  // namespace

FunctionSpec FunctionSpec::power(double beta) {
    if (!(beta > 0)) throw std::domain_error("power exponent must be positive");
    FunctionSpec f;
    f.kind_ = Kind::Power;
    f.p1_ = beta;
    return f;
}

FunctionSpec FunctionSpec::exp_minus_one(double lambda) {
    if (!(lambda > 0)) throw std::domain_error("exponential rate must be positive");
    FunctionSpec f;
    f.kind_ = Kind::ExpMinusOne;
    f.p1_ = lambda;
    return f;
}

FunctionSpec FunctionSpec::base_exponential(double base, double lambda) {
    if (!(base > 1)) throw std::domain_error("base must exceed 1");
    if (!(lambda > 0)) throw std::domain_error("exponential rate must be positive");
    FunctionSpec f;
    f.kind_ = Kind::BaseExp;
    f.p1_ = base;
    f.p2_ = lambda;
    return f;
}

FunctionSpec FunctionSpec::neg_exponential(double lambda) {
    if (!(lambda > 0)) throw std::domain_error("exponential rate must be positive");
    FunctionSpec f;
    f.kind_ = Kind::NegExp;
    f.p1_ = lambda;
    return f;
}

FunctionSpec FunctionSpec::ratio() {
    FunctionSpec f;
    f.kind_ = Kind::Ratio;
    return f;
}

FunctionSpec FunctionSpec::linear() {
    FunctionSpec f;
    f.kind_ = Kind::Linear;
    return f;
}

FunctionSpec FunctionSpec::conical(std::vector<std::pair<Scalar, FunctionSpec>> terms) {
    if (terms.empty()) throw std::domain_error("conical combination needs at least one term");
    bool positive = false;
    for (const auto& [c, child] : terms) {
        (void)child;
        if (c.exact() ? c.rat().num() < 0 : c.value() < 0)
            throw std::domain_error("conical coefficients must be non-negative");
        if (c.exact() ? c.rat().num() > 0 : c.value() > 0) positive = true;
    }
    if (!positive) throw std::domain_error("conical combination needs a positive coefficient");
    FunctionSpec f;
    f.kind_ = Kind::Conical;
    f.terms_ = std::move(terms);
    return f;
}

FunctionSpec FunctionSpec::hat(FunctionSpec inner, long nu, long splice_m) {
    if (nu < 3) throw std::domain_error("hat transform requires nu >= 3");
    if (splice_m < 1) throw std::domain_error("splice constant must be positive");
    FunctionSpec f;
    f.kind_ = Kind::Hat;
    f.nu_ = nu;
    f.m_ = splice_m;
    f.inner_ = std::make_shared<const FunctionSpec>(std::move(inner));
    return f;
}

bool FunctionSpec::exact_path() const {
    switch (kind_) {
        case Kind::Power: return integral_exponent(p1_);
        case Kind::Ratio:
        case Kind::Linear: return true;
        case Kind::Conical:
            for (const auto& [c, child] : terms_)
                if (!c.exact() || !child.exact_path()) return false;
            return true;
        default: return false;
    }
}

std::string FunctionSpec::str() const {
    switch (kind_) {
        case Kind::Power: return "pow:" + format_double(p1_);
        case Kind::ExpMinusOne: return "exp:" + format_double(p1_);
        case Kind::BaseExp:
            return "aexp:" + format_double(p1_) + "," + format_double(p2_);
        case Kind::NegExp: return "negexp:" + format_double(p1_);
        case Kind::Ratio: return "ratio";
        case Kind::Linear: return "lin";
        case Kind::Conical: {
            std::string out = "lc:";
            bool first = true;
            for (const auto& [c, child] : terms_) {
                if (!first) out += "+";
                first = false;
                std::string coef;
                if (c.exact()) {
                    auto dec = rational_decimal(c.rat());
                    coef = dec ? *dec : format_double(static_cast<double>(c.value()));
                } else {
                    coef = format_double(static_cast<double>(c.value()));
                }
                out += coef + "*" + child.str();
            }
            return out;
        }
        case Kind::Hat:
            return "hat:" + inner_->str() + "@" + std::to_string(nu_);
    }
    return "?";
}

Scalar eval(const FunctionSpec& f, long k) {
    if (k < 0) throw std::domain_error("eval expects k >= 0");
    switch (f.kind()) {
        case FunctionSpec::Kind::Power:
            if (integral_exponent(f.beta()))
                return Scalar(Rational::pow_int(k, static_cast<long>(f.beta())));
            return Scalar::approx(powl(static_cast<long double>(k), (long double)f.beta()));
        case FunctionSpec::Kind::ExpMinusOne:
            return Scalar::approx(expm1l((long double)f.lambda() * k));
        case FunctionSpec::Kind::BaseExp:
            return Scalar::approx(expm1l((long double)f.lambda() * logl((long double)f.base()) * k));
        case FunctionSpec::Kind::NegExp:
            return Scalar::approx(-expm1l(-(long double)f.lambda() * k));
        case FunctionSpec::Kind::Ratio:
            return Scalar(Rational(k, k + 1));
        case FunctionSpec::Kind::Linear:
            return Scalar(k);
        case FunctionSpec::Kind::Conical: {
            Scalar acc;
            for (const auto& [c, child] : f.terms()) acc = acc + c * eval(child, k);
            return acc;
        }
        case FunctionSpec::Kind::Hat: {
            if (k <= f.nu()) return eval(f.inner(), f.nu()) - eval(f.inner(), f.nu() - k);
            long double c = (long double)f.splice_m() * eval(f.inner(), f.nu()).value();
            return Scalar::approx(expm1l(c * k));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar forward_difference(const FunctionSpec& f, long k) {
    if (k < 1) throw std::domain_error("forward_difference expects k >= 1");
    switch (f.kind()) {
        case FunctionSpec::Kind::Power:
            return eval(f, k) - eval(f, k - 1);
        case FunctionSpec::Kind::ExpMinusOne: {
            long double l = f.lambda();
            return Scalar::approx(expl(l * (k - 1)) * expm1l(l));
        }
        case FunctionSpec::Kind::BaseExp: {
            long double c = (long double)f.lambda() * logl((long double)f.base());
            return Scalar::approx(expl(c * (k - 1)) * expm1l(c));
        }
        case FunctionSpec::Kind::NegExp: {
            long double l = f.lambda();
            return Scalar::approx(expl(-l * k) * expm1l(l));
        }
        case FunctionSpec::Kind::Ratio:
            return Scalar(Rational::from_parts(1, static_cast<Rational::Int>(k) * (k + 1)));
        case FunctionSpec::Kind::Linear:
            return Scalar(1);
        case FunctionSpec::Kind::Conical: {
            Scalar acc;
            for (const auto& [c, child] : f.terms()) acc = acc + c * forward_difference(child, k);
            return acc;
        }
        case FunctionSpec::Kind::Hat: {
            if (k <= f.nu()) return forward_difference(f.inner(), f.nu() - k + 1);
            long double c = (long double)f.splice_m() * eval(f.inner(), f.nu()).value();
            if (k == f.nu() + 1) return Scalar::approx(expm1l(c * k)) - eval(f.inner(), f.nu());
            return Scalar::approx(expl(c * (k - 1)) * expm1l(c));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// Shared loop shell: calls body(k) which returns false to stop; converts
// overflow (rational or float range) into an honest truncation of the
// verified range.
template <typename Body>
void scan_range(ConditionCheck& out, long k_lo, long k_hi, Body body) {
    out.checked_up_to = k_hi;
    for (long k = k_lo; k <= k_hi; ++k) {
        bool keep_going;
        try {
            keep_going = body(k);
        } catch (const std::overflow_error&) {
            out.overflow_at = k;
            out.checked_up_to = k - 1;
            return;
        }
        if (!keep_going) return;
    }
}

bool finite_pair(const Scalar& a, const Scalar& b) { return a.finite() && b.finite(); }

}  // namespace

ConditionCheck check_condition_1(const FunctionSpec& f, long K, long double tau, bool negated) {
    if (K < 2) throw std::domain_error("condition (1) check requires K >= 2");
    ConditionCheck out;
    const char* tag = negated ? "(1) on -g" : "(1)";
    scan_range(out, 0, K - 2, [&](long k) {
        Scalar hi = forward_difference(f, k + 2);
        Scalar lo = forward_difference(f, k + 1);
        if (!finite_pair(hi, lo)) {
            out.overflow_at = k;
            out.checked_up_to = k - 1;
            return false;
        }
        Cmp c = compare(hi, lo, tau);
        Cmp want = negated ? Cmp::Less : Cmp::Greater;
        if (c == want) return true;
        out.ok = false;
        std::string cond = tag;
        if (c == Cmp::NearTie) cond += " near-tie";
        out.first_failure = ConditionFailure{cond, k, hi.value(), lo.value()};
        return false;
    });
    return out;
}

ConditionCheck check_condition_2(const FunctionSpec& f, long K, long double tau) {
    if (K < 3) throw std::domain_error("condition (2) check requires K >= 3");
    ConditionCheck out;
    scan_range(out, 3, K, [&](long k) {
        Scalar lhs = Scalar(k - 2) * eval(f, k);
        Scalar rhs = Scalar(k) * (eval(f, k - 1) - eval(f, 1));
        if (!finite_pair(lhs, rhs)) {
            out.overflow_at = k;
            out.checked_up_to = k - 1;
            return false;
        }
        Cmp c = compare(lhs, rhs, tau);
        if (c == Cmp::Less) {
            out.ok = false;
            out.first_failure = ConditionFailure{"(2)", k, lhs.value(), rhs.value()};
            return false;
        }
        if (c == Cmp::Equal || c == Cmp::NearTie) out.ties.push_back({"(2)", k});
        return true;
    });
    return out;
}

ConditionCheck check_condition_7(const FunctionSpec& g, long K, long double tau) {
    if (K < 1) throw std::domain_error("condition (7) check requires K >= 1");
    ConditionCheck out;
    scan_range(out, 0, K, [&](long k) {
        Scalar lhs = eval(g, k);
        Scalar rhs = Scalar(2 * k) * forward_difference(g, k + 1);
        if (!finite_pair(lhs, rhs)) {
            out.overflow_at = k;
            out.checked_up_to = k - 1;
            return false;
        }
        Cmp c = compare(lhs, rhs, tau);
        if (c == Cmp::Less) {
            out.ok = false;
            out.first_failure = ConditionFailure{"(7)", k, lhs.value(), rhs.value()};
            return false;
        }
        // k = 0 is identically 0 >= 0 for every centered g; not worth a flag
        if (k >= 1 && (c == Cmp::Equal || c == Cmp::NearTie)) out.ties.push_back({"(7)", k});
        return true;
    });
    return out;
}

ConditionCheck check_strictly_increasing(const FunctionSpec& g, long K) {
    if (K < 1) throw std::domain_error("monotonicity check requires K >= 1");
    ConditionCheck out;
    scan_range(out, 1, K, [&](long k) {
        Scalar d = forward_difference(g, k);
        if (!d.finite()) {
            out.overflow_at = k;
            out.checked_up_to = k - 1;
            return false;
        }
        // raw positivity: the closed-form differences keep their sign until
        // genuine underflow, far past desk-scale K
        bool positive = d.exact() ? d.rat().num() > 0 : d.value() > 0.0L;
        if (positive) return true;
        out.ok = false;
        out.first_failure = ConditionFailure{"increasing", k, d.value(), 0.0L};
        return false;
    });
    return out;
}

namespace {

bool centered(const FunctionSpec& f) {
    Scalar v = eval(f, 0);
    return v.exact() ? v.rat().is_zero() : v.value() == 0.0L;
}

void merge(ClassReport& rep, const ConditionCheck& c) {
    if (c.first_failure && !rep.first_failure) rep.first_failure = c.first_failure;
    for (const auto& t : c.ties) rep.ties.push_back(t);
    if (c.overflow_at) {
        if (!rep.overflow_at || *c.overflow_at < *rep.overflow_at) rep.overflow_at = c.overflow_at;
        if (*c.overflow_at - 1 < rep.checked_up_to) rep.checked_up_to = *c.overflow_at - 1;
    }
}

}  // namespace

ClassReport in_class_F(const FunctionSpec& f, long K, long double tau) {
    if (K < 3) throw std::domain_error("class check requires K >= 3");
    ClassReport rep;
    rep.which = 'F';
    rep.checked_up_to = K;
    rep.centered_ok = centered(f);
    if (!rep.centered_ok) rep.first_failure = ConditionFailure{"centered", 0, eval(f, 0).value(), 0.0L};
    ConditionCheck c1 = check_condition_1(f, K, tau);
    rep.condition_1_ok = c1.ok;
    merge(rep, c1);
    ConditionCheck c2 = check_condition_2(f, K, tau);
    rep.condition_2_ok = c2.ok;
    merge(rep, c2);
    return rep;
}

ClassReport in_class_G(const FunctionSpec& g, long K, long double tau) {
    if (K < 3) throw std::domain_error("class check requires K >= 3");
    ClassReport rep;
    rep.which = 'G';
    rep.checked_up_to = K;
    rep.centered_ok = centered(g);
    if (!rep.centered_ok) rep.first_failure = ConditionFailure{"centered", 0, eval(g, 0).value(), 0.0L};
    ConditionCheck inc = check_strictly_increasing(g, K);
    rep.strictly_increasing_ok = inc.ok;
    merge(rep, inc);
    ConditionCheck c1 = check_condition_1(g, K, tau, /*negated=*/true);
    rep.condition_1_ok = c1.ok;
    merge(rep, c1);
    ConditionCheck c7 = check_condition_7(g, K, tau);
    rep.condition_7_ok = c7.ok;
    merge(rep, c7);
    return rep;
}

bool check_three_slopes(const FunctionSpec& f, long x1, long x2, long x3, long double tau) {
    if (!(0 <= x1 && x1 < x2 && x2 < x3)) throw std::domain_error("need 0 <= x1 < x2 < x3");
    Scalar f1 = eval(f, x1), f2 = eval(f, x2), f3 = eval(f, x3);
    // (f2-f1)/(x2-x1) < (f3-f1)/(x3-x1) < (f3-f2)/(x3-x2), cross-multiplied
    Scalar left_lhs = (f2 - f1) * Scalar(x3 - x1);
    Scalar left_rhs = (f3 - f1) * Scalar(x2 - x1);
    Scalar right_lhs = (f3 - f1) * Scalar(x3 - x2);
    Scalar right_rhs = (f3 - f2) * Scalar(x3 - x1);
    return compare(left_lhs, left_rhs, tau) == Cmp::Less &&
           compare(right_lhs, right_rhs, tau) == Cmp::Less;
}

namespace {

bool concave_catalog_variant(const FunctionSpec& g) {
    switch (g.kind()) {
        case FunctionSpec::Kind::NegExp:
        case FunctionSpec::Kind::Ratio:
        case FunctionSpec::Kind::Linear:
            return true;
        case FunctionSpec::Kind::Power:
            return g.beta() < 1.0;
        case FunctionSpec::Kind::Conical:
            for (const auto& [c, child] : g.terms()) {
                (void)c;
                if (!concave_catalog_variant(child)) return false;
            }
            return true;
        default:
            return false;
    }
}

bool splice_ok(const FunctionSpec& cand, long nu, long double tau) {
    // condition (1) across the splice
    for (long k : {nu - 1, nu}) {
        if (k < 0) continue;
        Scalar hi = forward_difference(cand, k + 2);
        Scalar lo = forward_difference(cand, k + 1);
        if (!hi.finite() || !lo.finite()) return false;
        if (compare(hi, lo, tau) != Cmp::Greater) return false;
    }
    // condition (2) at the splice points
    for (long k : {nu - 1, nu, nu + 1, nu + 2}) {
        if (k < 3) continue;
        Scalar lhs = Scalar(k - 2) * eval(cand, k);
        Scalar rhs = Scalar(k) * (eval(cand, k - 1) - eval(cand, 1));
        if (!lhs.finite() || !rhs.finite()) return false;
        if (!cmp_ge(compare(lhs, rhs, tau))) return false;
    }
    return true;
}

}  // namespace

FunctionSpec make_hat(const FunctionSpec& g, long nu, long m_max) {
    if (nu < 3) throw std::domain_error("hat transform requires nu >= 3");
    if (!concave_catalog_variant(g)) throw std::domain_error("hat transform expects a concave catalog variant");
    for (long m = 1; m <= m_max; ++m) {
        FunctionSpec cand = FunctionSpec::hat(g, nu, m);
        if (splice_ok(cand, nu, kDefaultTau)) return cand;
    }
    throw std::runtime_error("no splice constant M <= " + std::to_string(m_max) +
                             " satisfies the splice inequalities");
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    std::string ident() {
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected function name", pos);
        return s.substr(start, pos - start);
    }

    struct Number {
        double value;
        std::optional<Rational> exact;
        std::size_t start;
    };

    Number number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::size_t int_digits = pos - start;
        std::size_t frac_digits = 0;
        if (peek() == '.') {
            ++pos;
            std::size_t frac_start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            frac_digits = pos - frac_start;
            if (frac_digits == 0) throw ParseError("digits expected after '.'", pos);
        }
        if (int_digits == 0 && frac_digits == 0) throw ParseError("expected number", pos);
        std::string text = s.substr(start, pos - start);
        double v = std::strtod(text.c_str(), nullptr);
        std::optional<Rational> exact;
        if (int_digits + frac_digits <= 18) {
            std::string digits;
            for (char c : text)
                if (c != '.') digits.push_back(c);
            long long num = digits.empty() ? 0 : std::strtoll(digits.c_str(), nullptr, 10);
            exact = Rational(num) / Rational::pow_int(10, static_cast<long>(frac_digits));
        }
        return {v, exact, start};
    }

    FunctionSpec parse_spec() {
        std::size_t name_pos = pos;
        std::string name = ident();
        if (name == "pow") {
            expect(':');
            Number n = number();
            if (!(n.value > 0)) throw ParseError("pow exponent must be positive", n.start);
            return FunctionSpec::power(n.value);
        }
        if (name == "exp") {
            expect(':');
            Number n = number();
            if (!(n.value > 0)) throw ParseError("exp rate must be positive", n.start);
            return FunctionSpec::exp_minus_one(n.value);
        }
        if (name == "negexp") {
            expect(':');
            Number n = number();
            if (!(n.value > 0)) throw ParseError("negexp rate must be positive", n.start);
            return FunctionSpec::neg_exponential(n.value);
        }
        if (name == "ratio") return FunctionSpec::ratio();
        if (name == "lin") return FunctionSpec::linear();
        if (name == "lc") {
            expect(':');
            std::vector<std::pair<Scalar, FunctionSpec>> terms;
            do {
                Number c = number();
                if (c.value < 0) throw ParseError("coefficient must be non-negative", c.start);
                expect('*');
                FunctionSpec child = parse_spec();
                Scalar coef = c.exact ? Scalar(*c.exact) : Scalar::approx((long double)c.value);
                terms.emplace_back(coef, std::move(child));
            } while (eat('+'));
            return FunctionSpec::conical(std::move(terms));
        }
        if (name == "hat") {
            expect(':');
            FunctionSpec inner = parse_spec();
            expect('@');
            Number n = number();
            if (n.value != std::floor(n.value) || n.value < 3)
                throw ParseError("hat level must be an integer >= 3", n.start);
            return make_hat(inner, static_cast<long>(n.value));
        }
        throw ParseError("unknown function '" + name + "'", name_pos);
    }
};

}  // namespace

FunctionSpec parse_function(const std::string& text) {
    Parser p{text};
    FunctionSpec f = p.parse_spec();
    if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
    return f;
}

}  // namespace degseq
