#pragma once

#include <patternlab/bigint.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patternlab {

/// Exponent vector of a monomial; index = variable slot, entry = exponent.
/// Negative entries are legal transiently (Laurent intermediates) but every
/// value exposed as a recursion-table entry must be a true polynomial.
using exp_vec = std::vector<exp_t>;

/// Canonical term order: total degree descending, ties broken by exponent
/// vector lexicographically descending. This fixes both the in-memory map
/// order and the serialized term order.
struct grlex_desc {
    bool operator()(const exp_vec& a, const exp_vec& b) const {
        long long da = std::accumulate(a.begin(), a.end(), 0LL);
        long long db = std::accumulate(b.begin(), b.end(), 0LL);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class multipoly;

/// A substitution sends each variable of the source ring to a monomial of the
/// target ring: images[v] is the exponent vector of the image of variable v.
/// All images must share one length, which becomes the target arity; on
/// exponent vectors the substitution acts as the induced linear map.
class substitution {
  public:
    substitution() = default;
    explicit substitution(std::vector<exp_vec> images) : images_(std::move(images)) {
        for (const auto& im : images_)
            if (im.size() != images_.front().size())
                throw std::invalid_argument("substitution images must share one arity");
    }

    static substitution identity(int arity) {
        std::vector<exp_vec> im(arity, exp_vec(arity, 0));
        for (int v = 0; v < arity; ++v) im[v][v] = 1;
        return substitution(std::move(im));
    }

    /// Replace the image of variable v (builder style; image length must
    /// match the target arity fixed at construction).
    substitution& map(int v, exp_vec image) {
        if (v < 0 || v >= static_cast<int>(images_.size()))
            throw std::out_of_range("substitution: variable index out of range");
        if (image.size() != images_.front().size())
            throw std::invalid_argument("substitution: image arity mismatch");
        images_[static_cast<size_t>(v)] = std::move(image);
        return *this;
    }

    int source_arity() const { return static_cast<int>(images_.size()); }
    int target_arity() const { return images_.empty() ? 0 : static_cast<int>(images_.front().size()); }
    const exp_vec& image(int v) const { return images_[static_cast<size_t>(v)]; }

    exp_vec apply(const exp_vec& e) const {
        if (e.size() != images_.size())
            throw std::invalid_argument("substitution: exponent arity mismatch");
        const int out = target_arity();
        std::vector<long long> acc(static_cast<size_t>(out), 0);
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            const exp_vec& im = images_[v];
            for (int t = 0; t < out; ++t) acc[static_cast<size_t>(t)] += static_cast<long long>(e[v]) * im[static_cast<size_t>(t)];
        }
        exp_vec r(static_cast<size_t>(out));
        for (int t = 0; t < out; ++t) r[static_cast<size_t>(t)] = checked_exp(acc[static_cast<size_t>(t)]);
        return r;
    }

  private:
    std::vector<exp_vec> images_;
};

/// Sparse multivariate (Laurent-capable) polynomial with exact coefficients.
/// Invariants: no stored zero coefficient; all exponent vectors have length
/// arity(); iteration order is the canonical grlex-descending order.
class multipoly {
  public:
    using term_map = std::map<exp_vec, bigint, grlex_desc>;

    multipoly() = default;
    explicit multipoly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("multipoly: negative arity");
    }

    static multipoly constant(int arity, bigint c) {
        multipoly p(arity);
        p.add_term(exp_vec(static_cast<size_t>(arity), 0), std::move(c));
        return p;
    }

    static multipoly monomial(int arity, exp_vec e, bigint c = 1) {
        multipoly p(arity);
        if (e.size() != static_cast<size_t>(arity)) throw std::invalid_argument("multipoly::monomial: arity mismatch");
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    static multipoly variable(int arity, int v, exp_t power = 1) {
        exp_vec e(static_cast<size_t>(arity), 0);
        e.at(static_cast<size_t>(v)) = power;
        return monomial(arity, std::move(e));
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    bool operator==(const multipoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const multipoly& o) const { return !(*this == o); }

    void add_term(exp_vec e, bigint c) {
        if (e.size() != static_cast<size_t>(arity_)) throw std::invalid_argument("multipoly::add_term: arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    multipoly& operator+=(const multipoly& o) {
        check_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    multipoly& operator-=(const multipoly& o) {
        check_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend multipoly operator+(multipoly a, const multipoly& b) { return a += b; }
    friend multipoly operator-(multipoly a, const multipoly& b) { return a -= b; }

    friend multipoly operator*(const multipoly& a, const multipoly& b) {
        a.check_same_arity(b);
        multipoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                exp_vec e(ea.size());
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = checked_exp(static_cast<long long>(ea[i]) + static_cast<long long>(eb[i]));
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    multipoly& operator*=(const multipoly& o) { return *this = *this * o; }

    /// Multiply by the single term c * x^e.
    multipoly scale_monomial(const exp_vec& e, const bigint& c = 1) const {
        if (e.size() != static_cast<size_t>(arity_)) throw std::invalid_argument("scale_monomial: arity mismatch");
        multipoly r(arity_);
        if (c == 0) return r;
        for (const auto& [et, ct] : terms_) {
            exp_vec ne(et.size());
            for (size_t i = 0; i < ne.size(); ++i)
                ne[i] = checked_exp(static_cast<long long>(et[i]) + static_cast<long long>(e[i]));
            r.terms_.emplace(std::move(ne), ct * c);
        }
        return r;
    }

    /// Ring map induced by a substitution. The result arity is the image
    /// arity, so this also covers variable renumbering and ring embeddings.
    multipoly substitute(const substitution& s) const {
        if (s.source_arity() != arity_) throw std::invalid_argument("substitute: arity mismatch");
        multipoly r(s.target_arity());
        for (const auto& [e, c] : terms_) r.add_term(s.apply(e), c);
        return r;
    }

    /// Set the listed variables to 1 and drop their slots; the remaining
    /// variables keep their relative order in a ring of reduced arity.
    multipoly specialize(const std::vector<int>& vars_to_one) const {
        std::vector<bool> drop(static_cast<size_t>(arity_), false);
        for (int v : vars_to_one) {
            if (v < 0 || v >= arity_) throw std::out_of_range("specialize: variable index out of range");
            drop[static_cast<size_t>(v)] = true;
        }
        multipoly r(arity_ - static_cast<int>(std::count(drop.begin(), drop.end(), true)));
        for (const auto& [e, c] : terms_) {
            exp_vec ne;
            ne.reserve(static_cast<size_t>(r.arity_));
            for (size_t i = 0; i < e.size(); ++i)
                if (!drop[i]) ne.push_back(e[i]);
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    bigint eval_all_ones() const {
        bigint s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bigint coefficient(const exp_vec& e) const {
        if (e.size() != static_cast<size_t>(arity_)) throw std::invalid_argument("coefficient: arity mismatch");
        auto it = terms_.find(e);
        return it == terms_.end() ? bigint(0) : it->second;
    }

    bool has_negative_exponent() const {
        for (const auto& [e, c] : terms_)
            for (exp_t x : e)
                if (x < 0) return true;
        return false;
    }

    /// Throws if any exponent is negative; recursion-table entries call this
    /// after Laurent intermediates must have cancelled.
    const multipoly& assert_polynomial(const char* what = "polynomial") const {
        if (has_negative_exponent())
            throw std::logic_error(std::string(what) + ": negative exponent survived, implementation fault");
        return *this;
    }

    exp_t max_exponent(int v) const {
        exp_t m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, e.at(static_cast<size_t>(v)));
        return m;
    }

    /// Sum of exponent(v) * coefficient over all terms: the formal partial
    /// derivative in variable v evaluated with every variable set to 1.
    bigint weighted_exponent_sum(int v) const {
        bigint s = 0;
        for (const auto& [e, c] : terms_) s += bigint(e.at(static_cast<size_t>(v))) * c;
        return s;
    }

  private:
    void check_same_arity(const multipoly& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("multipoly: arity mismatch");
    }

    int arity_ = 0;
    term_map terms_;
};

/// Canonical text form: terms in canonical order joined by " + "/" - ",
/// factors joined by "*", unit coefficients and unit exponents elided,
/// e.g. "x1^3*x3 + x1^2*x2*x4". The zero polynomial prints as "0".
inline std::string to_text(const multipoly& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.arity()) throw std::invalid_argument("to_text: names/arity mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bigint mag = c < 0 ? bigint(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << mono;
        }
    }
    return out.str();
}

namespace detail {

/// Recursive-descent parser over: poly := term (('+'|'-') term)*,
/// term := factor (('*' | juxtaposition) factor)*,
/// factor := integer | name ('^' '-'? integer)? | '(' poly ')' ('^' integer)?.
/// Whitespace between factors multiplies; exponents may be brace-wrapped.
class poly_parser {
  public:
    poly_parser(std::string_view src, const std::vector<std::string>& names)
        : src_(src), names_(names) {}

    multipoly parse() {
        multipoly p = parse_poly();
        skip_ws();
        if (pos_ != src_.size())
            throw std::invalid_argument("polynomial parse error at '" + offending_token() + "'");
        return p;
    }

  private:
    int arity() const { return static_cast<int>(names_.size()); }

    multipoly parse_poly() {
        multipoly acc(arity());
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = take() == '-';
        acc += parse_term(neg);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            acc += parse_term(c == '-');
        }
        return acc;
    }

    multipoly parse_term(bool negated) {
        multipoly prod = multipoly::constant(arity(), negated ? -1 : 1);
        bool any = false;
        for (;;) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                prod = prod * multipoly::constant(arity(), parse_integer());
                any = true;
            } else if (c == '(') {
                take();
                multipoly group = parse_poly();
                skip_ws();
                if (peek() != ')') throw std::invalid_argument("polynomial parse error at '" + offending_token() + "'");
                take();
                skip_ws();
                if (peek() == '^') {
                    take();
                    long long pw = parse_exponent();
                    if (pw < 0) throw std::invalid_argument("negative power of a parenthesized group");
                    multipoly powed = multipoly::constant(arity(), 1);
                    for (long long r = 0; r < pw; ++r) powed = powed * group;
                    group = std::move(powed);
                }
                prod = prod * group;
                any = true;
            } else if (int v = match_name(); v >= 0) {
                long long pw = 1;
                skip_ws();
                if (peek() == '^') {
                    take();
                    pw = parse_exponent();
                }
                exp_vec e(names_.size(), 0);
                e[static_cast<size_t>(v)] = checked_exp(pw);
                prod = prod.scale_monomial(e);
                any = true;
            } else if (c == '*') {
                take();
                continue;
            } else {
                break;
            }
        }
        if (!any) throw std::invalid_argument("polynomial parse error at '" + offending_token() + "'");
        return prod;
    }

    bigint parse_integer() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return bigint(std::string(src_.substr(start, pos_ - start)));
    }

    long long parse_exponent() {
        skip_ws();
        bool braced = peek() == '{';
        if (braced) take();
        skip_ws();
        bool neg = peek() == '-';
        if (neg) take();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument("polynomial parse error at '" + offending_token() + "'");
        long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > INT32_MAX) throw std::overflow_error("exponent literal too large");
            ++pos_;
        }
        if (braced) {
            skip_ws();
            if (peek() != '}') throw std::invalid_argument("polynomial parse error at '" + offending_token() + "'");
            take();
        }
        return neg ? -v : v;
    }

    /// Longest-match lookup of a variable name at the cursor.
    int match_name() {
        int best = -1;
        size_t best_len = 0;
        for (size_t v = 0; v < names_.size(); ++v) {
            const std::string& nm = names_[v];
            if (nm.empty() || nm.size() < best_len) continue;
            if (src_.substr(pos_, nm.size()) == nm && nm.size() > best_len) {
                best = static_cast<int>(v);
                best_len = nm.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() { return src_[pos_++]; }
    std::string offending_token() const {
        size_t end = pos_;
        while (end < src_.size() && !std::isspace(static_cast<unsigned char>(src_[end])) && end - pos_ < 16) ++end;
        return pos_ >= src_.size() ? "<end of input>" : std::string(src_.substr(pos_, end - pos_));
    }

    std::string_view src_;
    const std::vector<std::string>& names_;
    size_t pos_ = 0;
};

} // namespace detail

/// Inverse of to_text on canonical output; also accepts loose input
/// (juxtaposed factors, braced exponents, arbitrary factor order).
inline multipoly parse_poly(std::string_view text, const std::vector<std::string>& names) {
    return detail::poly_parser(text, names).parse();
}

inline nlohmann::ordered_json to_json(const multipoly& p) {
    nlohmann::ordered_json j;
    j["arity"] = p.arity();
    auto& terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["e"] = e;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    return j;
}

inline multipoly poly_from_json(const nlohmann::json& j) {
    multipoly p(j.at("arity").get<int>());
    for (const auto& t : j.at("terms")) {
        exp_vec e = t.at("e").get<exp_vec>();
        p.add_term(std::move(e), bigint(t.at("c").get<std::string>()));
    }
    return p;
}

/// Default variable names x1..xk.
inline std::vector<std::string> default_names(int arity, const std::string& stem = "x") {
    std::vector<std::string> n;
    n.reserve(static_cast<size_t>(arity));
    for (int i = 1; i <= arity; ++i) n.push_back(stem + std::to_string(i));
    return n;
}

} // namespace patternlab
