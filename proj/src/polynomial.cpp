#include "calab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace calab {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::invalid_argument("monomial division is not exact");
    }
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exp_coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {
int cmp_grevlex(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller last exponent wins
    }
    return 0;
}

int cmp_lex(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}
}  // namespace

int compare_monomials(const Exponents& a, const Exponents& b, const MonomialOrder& order) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vector arity mismatch");
    switch (order.kind) {
        case OrderKind::grevlex:
            return cmp_grevlex(a, b, 0, a.size());
        case OrderKind::lex:
            return cmp_lex(a, b);
        case OrderKind::block: {
            size_t k = static_cast<size_t>(order.block_size);
            if (k > a.size()) k = a.size();
            if (int c = cmp_grevlex(a, b, 0, k)) return c;
            return cmp_grevlex(a, b, k, a.size());
        }
    }
    return 0;
}

PolyRing::PolyRing(std::vector<std::string> v, CoeffField f, MonomialOrder o)
    : vars_(std::move(v)), field_(f), order_(o) {}

RingPtr PolyRing::make(std::vector<std::string> variables, CoeffField field, MonomialOrder order) {
    if (variables.empty()) throw std::invalid_argument("ring needs at least one variable");
    for (size_t i = 0; i < variables.size(); ++i)
        for (size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw std::invalid_argument("duplicate variable name " + variables[i]);
    return RingPtr(new PolyRing(std::move(variables), field, order));
}

int PolyRing::variable_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
    return this == &o || (vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_);
}

RingPtr PolyRing::extended(const std::vector<std::string>& extra_front) const {
    std::vector<std::string> v = extra_front;
    v.insert(v.end(), vars_.begin(), vars_.end());
    return make(std::move(v), field_, MonomialOrder::elimination(static_cast<int>(extra_front.size())));
}

std::string PolyRing::describe() const {
    std::string s = field_.name() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), terms_(ExpGreater{ring_->order()}) {
    if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace(Exponents(ring->nvars(), 0), c);
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long c) {
    return constant(ring, Scalar::of_int(c, ring->field()));
}

Polynomial Polynomial::variable(const RingPtr& ring, int index, int power) {
    if (index < 0 || index >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    Exponents e(ring->nvars(), 0);
    e[index] = power;
    return monomial(ring, std::move(e), Scalar::one(ring->field()));
}

Polynomial Polynomial::monomial(const RingPtr& ring, Exponents e, const Scalar& c) {
    if (static_cast<int>(e.size()) != ring->nvars()) throw std::invalid_argument("exponent arity mismatch");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

const Exponents& Polynomial::lead_exponents() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no lead term");
    return terms_.begin()->first;
}

const Scalar& Polynomial::lead_coeff() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no lead term");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r = *this;
    for (auto& [e, v] : r.terms_) v = v * c;
    return r;
}

Polynomial Polynomial::times_monomial(const Exponents& e, const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(exp_add(e1, e), c1 * c);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coeff().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

Polynomial Polynomial::mapped_to(const RingPtr& target) const {
    // variables absent from the target are fine as long as they are unused
    std::vector<int> where(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) where[i] = target->variable_index(ring_->variable(i));
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exponents t(target->nvars(), 0);
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw std::invalid_argument("target ring lacks variable " + ring_->variable(i));
            t[where[i]] = e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

Polynomial Polynomial::substituted(const RingPtr& target, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw std::invalid_argument("need one image per variable");
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < ring_->nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * images[i];
        r = r + t;
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool unit_coeff = (cs == "1") && total_degree(e) > 0;
        if (!unit_coeff) out << cs;
        bool printed = !unit_coeff;
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << ring_->variable(i);
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Polynomial expression parser (shared by tests and the session language).

namespace {

struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what +
                                    " in \"" + s + "\"");
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        skip_ws();
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (!eat('+'))
                break;
        }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+' || s[pos] == '-') {
                bool minus = s[pos] == '-';
                ++pos;
                Polynomial t = parse_term();
                acc = minus ? acc - t : acc + t;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_power();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc = acc * parse_power();
            } else if (pos < s.size() &&
                       (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
                // implicit product, e.g. "2x" or "x(y+1)"
                acc = acc * parse_power();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            int e = std::stoi(s.substr(start, pos - start));
            Polynomial r = Polynomial::constant(ring, 1);
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long num = std::stol(s.substr(start, pos - start));
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                size_t save = pos;
                ++pos;
                skip_ws();
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) {
                    pos = save;  // not a fraction after all
                } else {
                    long den = std::stol(s.substr(dstart, pos - dstart));
                    if (ring->field().kind != FieldKind::rationals)
                        return Polynomial::constant(ring, Scalar::of_int(num, ring->field()) /
                                                              Scalar::of_int(den, ring->field()));
                    return Polynomial::constant(ring, Scalar::of_rational(num, den));
                }
            }
            return Polynomial::constant(ring, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->variable_index(name);
            if (idx < 0) fail("unknown variable '" + name + "' in ring " + ring->describe());
            return Polynomial::variable(ring, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    PolyParser p{ring, text};
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::vector<Polynomial> parse_polynomials(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
    return out;
}

}  // namespace calab
