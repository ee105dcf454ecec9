#include "hforge/field.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hforge {

struct FieldData {
    FieldKind kind = FieldKind::rational;
    mpz_class characteristic = 0;
    std::size_t degree = 1;
    BasePoly minpoly;                               // extension only, monic
    std::vector<std::string> aut_labels;            // sorted
    std::vector<BasePoly> aut_images;               // σ(θ) per label
    std::vector<std::vector<BasePoly>> aut_columns; // σ(θ^a) per label, per a
    std::vector<BasePoly> high_powers;              // θ^(n+i), i = 0..n-2
    bool irreducibility_checked = true;
    std::string identity_label;
};

namespace {

// ---------------------------------------------------------------- prime-field scalars

void reduce(mpq_class& x, const mpz_class& p)
{
    if (p == 0) {
        x.canonicalize();
        return;
    }
    mpz_class num;
    mpz_fdiv_r(num.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t());
    if (x.get_den() != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()) == 0) {
            throw MathError("denominator " + x.get_den().get_str() + " is not invertible mod " +
                            p.get_str());
        }
        num *= inv;
        mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    }
    x = num;
}

mpq_class base_inverse(const mpq_class& a, const mpz_class& p)
{
    if (a == 0) {
        throw MathError("division by zero");
    }
    if (p == 0) {
        return 1 / a;
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return mpq_class(inv);
}

// ---------------------------------------------------------------- polynomials over the prime field

void trim(BasePoly& f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

BasePoly poly_mul(const BasePoly& a, const BasePoly& b, const mpz_class& p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    BasePoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    for (auto& c : r) reduce(c, p);
    trim(r);
    return r;
}

BasePoly poly_sub(const BasePoly& a, const BasePoly& b, const mpz_class& p)
{
    BasePoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& c : r) reduce(c, p);
    trim(r);
    return r;
}

// Division with remainder; divisor must be nonzero.
std::pair<BasePoly, BasePoly> poly_divmod(BasePoly a, const BasePoly& b, const mpz_class& p)
{
    trim(a);
    if (a.size() < b.size()) {
        return {{}, a};
    }
    const mpq_class lead_inv = base_inverse(b.back(), p);
    BasePoly q(a.size() - b.size() + 1, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() * lead_inv;
        reduce(c, p);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= c * b[i];
            reduce(a[shift + i], p);
        }
        trim(a);
    }
    trim(q);
    return {q, a};
}

BasePoly poly_mod(const BasePoly& a, const BasePoly& m, const mpz_class& p)
{
    return poly_divmod(a, m, p).second;
}

BasePoly make_monic(BasePoly f, const mpz_class& p)
{
    trim(f);
    if (f.empty()) return f;
    const mpq_class inv = base_inverse(f.back(), p);
    for (auto& c : f) {
        c *= inv;
        reduce(c, p);
    }
    return f;
}

BasePoly poly_gcd(BasePoly a, BasePoly b, const mpz_class& p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        BasePoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

BasePoly poly_powmod(BasePoly base, mpz_class e, const BasePoly& m, const mpz_class& p)
{
    BasePoly result{mpq_class(1)};
    base = poly_mod(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            result = poly_mod(poly_mul(result, base, p), m, p);
        }
        e >>= 1;
        if (e > 0) {
            base = poly_mod(poly_mul(base, base, p), m, p);
        }
    }
    return result;
}

// Extended Euclid: returns (g, s) with s*a ≡ g (mod m), g monic.
std::pair<BasePoly, BasePoly> poly_xgcd(const BasePoly& a, const BasePoly& m, const mpz_class& p)
{
    BasePoly r0 = m, r1 = a;
    BasePoly s0{}, s1{mpq_class(1)};
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, p);
        BasePoly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const mpq_class inv = base_inverse(r0.back(), p);
    for (auto& c : r0) {
        c *= inv;
        reduce(c, p);
    }
    for (auto& c : s0) {
        c *= inv;
        reduce(c, p);
    }
    return {r0, s0};
}

// ---------------------------------------------------------------- irreducibility over ℚ

std::optional<std::vector<mpz_class>> divisors(mpz_class n)
{
    n = abs(n);
    if (n == 0) return std::nullopt;
    if (n > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<mpz_class> primitive_integer(const BasePoly& f)
{
    mpz_class l = 1;
    for (const auto& c : f) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    for (const auto& c : f) {
        out.push_back(mpz_class(c.get_num() * (l / c.get_den())));
    }
    return out;
}

mpz_class eval_int(const std::vector<mpz_class>& f, const mpq_class& x, mpq_class& out)
{
    out = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
        out = out * x + f[i];
    }
    return 0;
}

std::optional<bool> has_rational_root(const std::vector<mpz_class>& f)
{
    if (f.front() == 0) return true;
    auto num = divisors(f.front());
    auto den = divisors(f.back());
    if (!num || !den) return std::nullopt;
    mpq_class v;
    for (const auto& a : *num) {
        for (const auto& b : *den) {
            for (int sign : {1, -1}) {
                mpq_class x(sign * a, b);
                x.canonicalize();
                eval_int(f, x, v);
                if (v == 0) return true;
            }
        }
    }
    return false;
}

// Monic integer quartic: does it split into two monic integer quadratics?
std::optional<bool> quartic_has_quadratic_factor(const std::vector<mpz_class>& g)
{
    const mpz_class& c0 = g[0];
    const mpz_class& c1 = g[1];
    const mpz_class& c2 = g[2];
    const mpz_class& c3 = g[3];
    auto divs = divisors(c0);
    if (!divs) return std::nullopt;
    for (const auto& d0 : *divs) {
        for (int sign : {1, -1}) {
            const mpz_class b = sign * d0;
            const mpz_class d = c0 / b;
            // (x²+ax+b)(x²+cx+d): a+c=c3, b+d+ac=c2, ad+bc=c1
            if (d != b) {
                const mpz_class numr = c1 - b * c3;
                const mpz_class den = d - b;
                if (numr % den != 0) continue;
                const mpz_class a = numr / den;
                const mpz_class c = c3 - a;
                if (b + d + a * c == c2) return true;
            } else {
                if (c1 != b * c3) continue;
                // a + c = c3, a*c = c2 - 2b
                const mpz_class prod = c2 - 2 * b;
                const mpz_class disc = c3 * c3 - 4 * prod;
                if (disc < 0) continue;
                mpz_class r;
                mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
                if (r * r == disc && ((c3 + r) % 2 == 0)) return true;
            }
        }
    }
    return false;
}

std::optional<bool> irreducible_over_q(const BasePoly& poly)
{
    const std::size_t n = poly.size() - 1;
    if (n == 1) return true;
    if (n > 4) return std::nullopt;
    auto f = primitive_integer(poly);
    auto root = has_rational_root(f);
    if (!root) return std::nullopt;
    if (*root) return false;
    if (n <= 3) return true;
    // Scale to a monic integer quartic: a⁴·f(y/a) / a = y⁴ + c3 y³ + c2 a y² + c1 a² y + c0 a³.
    const mpz_class a = f[4];
    std::vector<mpz_class> g{f[0] * a * a * a, f[1] * a * a, f[2] * a, f[3], 1};
    auto quad = quartic_has_quadratic_factor(g);
    if (!quad) return std::nullopt;
    return !*quad;
}

std::optional<bool> irreducible_over_fp(const BasePoly& poly, const mpz_class& p)
{
    // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= n/2.
    const BasePoly f = make_monic(poly, p);
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    const BasePoly x{mpq_class(0), mpq_class(1)};
    BasePoly h = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        BasePoly g = poly_gcd(f, poly_sub(h, x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::shared_ptr<FieldData> rational_data()
{
    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::rational;
    d->identity_label = "id";
    d->aut_labels = {"id"};
    d->aut_images = {BasePoly{mpq_class(0)}};
    d->aut_columns = {{BasePoly{mpq_class(1)}}};
    return d;
}

bool is_probable_prime(const mpz_class& p)
{
    return mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

}  // namespace

// ==================================================================== Field

Field Field::rational()
{
    static const Field q(rational_data());
    return q;
}

Field Field::prime(const mpz_class& p)
{
    if (p < 2 || !is_probable_prime(p)) {
        throw InputError("GF(p) requires p prime; got " + p.get_str());
    }
    auto d = rational_data();
    d->kind = FieldKind::prime;
    d->characteristic = p;
    return Field(d);
}

Field Field::extension(const Field& base, const BasePoly& minpoly_in,
                       const std::map<std::string, BasePoly>& automorphisms)
{
    if (!base.valid()) throw InputError("extension over an invalid base field");
    if (base.kind() == FieldKind::extension) {
        throw InputError("nested extensions must be supplied flattened over the prime field");
    }
    const mpz_class& p = base.characteristic();
    BasePoly minpoly = minpoly_in;
    for (auto& c : minpoly) reduce(c, p);
    trim(minpoly);
    if (minpoly.size() < 2) throw MathError("minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1) throw MathError("minimal polynomial must be monic");

    auto d = std::make_shared<FieldData>();
    d->kind = FieldKind::extension;
    d->characteristic = p;
    d->degree = minpoly.size() - 1;
    d->minpoly = minpoly;
    const std::size_t n = d->degree;

    auto irreducible = p == 0 ? irreducible_over_q(minpoly) : irreducible_over_fp(minpoly, p);
    if (irreducible && !*irreducible) {
        throw MathError("minimal polynomial is reducible over the base field");
    }
    d->irreducibility_checked = irreducible.has_value();

    // θ^(n+i) in the power basis, for products up to degree 2n-2.
    {
        BasePoly cur(n, mpq_class(0));
        for (std::size_t i = 0; i < n; ++i) {
            cur[i] = -minpoly[i];
            reduce(cur[i], p);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            d->high_powers.push_back(cur);
            // multiply by θ
            BasePoly next(n, mpq_class(0));
            const mpq_class top = cur[n - 1];
            for (std::size_t j = n - 1; j > 0; --j) next[j] = cur[j - 1];
            for (std::size_t j = 0; j < n; ++j) {
                next[j] -= top * minpoly[j];
                reduce(next[j], p);
            }
            cur = std::move(next);
        }
    }

    Field partial(d);
    if (automorphisms.empty()) throw MathError("an extension must declare at least the identity automorphism");
    for (const auto& [label, image_in] : automorphisms) {
        BasePoly image = image_in;
        if (image.size() > n) throw MathError("automorphism image for '" + label + "' has too many coordinates");
        image.resize(n, mpq_class(0));
        for (auto& c : image) reduce(c, p);
        const FieldElement img = partial.from_coords(image);
        // minpoly(img) == 0
        FieldElement acc = partial.zero();
        for (std::size_t i = minpoly.size(); i-- > 0;) {
            acc = acc * img + partial.from_rational(minpoly[i]);
        }
        if (!acc.is_zero()) {
            throw MathError("automorphism '" + label + "' does not map the generator to a root of the minimal polynomial");
        }
        std::vector<BasePoly> cols;
        FieldElement pw = partial.one();
        for (std::size_t a = 0; a < n; ++a) {
            cols.emplace_back(pw.coords().begin(), pw.coords().end());
            pw = pw * img;
        }
        d->aut_labels.push_back(label);
        d->aut_images.push_back(image);
        d->aut_columns.push_back(std::move(cols));
    }
    // distinct images
    for (std::size_t i = 0; i < d->aut_images.size(); ++i) {
        for (std::size_t j = i + 1; j < d->aut_images.size(); ++j) {
            if (d->aut_images[i] == d->aut_images[j]) {
                throw MathError("automorphisms '" + d->aut_labels[i] + "' and '" + d->aut_labels[j] +
                                "' coincide");
            }
        }
    }
    // identity present
    BasePoly theta(n, mpq_class(0));
    if (n == 1) {
        theta[0] = -minpoly[0];
        reduce(theta[0], p);
    } else {
        theta[1] = 1;
    }
    for (std::size_t i = 0; i < d->aut_images.size(); ++i) {
        if (d->aut_images[i] == theta) d->identity_label = d->aut_labels[i];
    }
    if (d->identity_label.empty()) throw MathError("declared automorphisms do not include the identity");
    Field result(d);
    // closure under composition
    for (const auto& a : d->aut_labels) {
        for (const auto& b : d->aut_labels) {
            (void)result.compose(a, b);
        }
    }
    return result;
}

FieldKind Field::kind() const { return data_->kind; }
std::size_t Field::degree() const { return data_->degree; }
const mpz_class& Field::characteristic() const { return data_->characteristic; }
bool Field::is_finite() const { return data_->characteristic != 0; }
bool Field::irreducibility_checked() const { return data_->irreducibility_checked; }
const BasePoly& Field::minpoly() const { return data_->minpoly; }

mpz_class Field::order() const
{
    if (!is_finite()) throw MathError("ℚ-based fields are infinite");
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), data_->characteristic.get_mpz_t(), data_->degree);
    return q;
}

Field Field::prime_field() const
{
    if (data_->kind != FieldKind::extension) return *this;
    if (data_->characteristic == 0) return rational();
    return prime(data_->characteristic);
}

FieldElement Field::zero() const { return FieldElement(*this, Coords(data_->degree, mpq_class(0))); }

FieldElement Field::one() const
{
    Coords c(data_->degree, mpq_class(0));
    c[0] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::from_int(long long v) const { return from_rational(mpq_class(mpz_class(std::to_string(v)))); }

FieldElement Field::from_rational(const mpq_class& v) const
{
    Coords c(data_->degree, mpq_class(0));
    c[0] = v;
    reduce(c[0], data_->characteristic);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::from_coords(std::span<const mpq_class> coords) const
{
    if (coords.size() != data_->degree) {
        throw InputError("expected " + std::to_string(data_->degree) + " coordinates, got " +
                         std::to_string(coords.size()));
    }
    Coords c(coords.begin(), coords.end());
    for (auto& x : c) reduce(x, data_->characteristic);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::generator() const
{
    if (data_->kind != FieldKind::extension) return one();
    if (data_->degree == 1) {
        return from_rational(-data_->minpoly[0]);
    }
    Coords c(data_->degree, mpq_class(0));
    c[1] = 1;
    return FieldElement(*this, std::move(c));
}

namespace {

mpq_class parse_rational(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (s.empty()) throw InputError("empty field element");
    if (s[0] == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InputError("malformed field element '" + s + "'");
        return mpq_class(mpz_class(s));
    }
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw InputError("malformed field element '" + s + "'");
    mpz_class den(b);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    mpq_class q(mpz_class(a), den);
    q.canonicalize();
    return q;
}

}  // namespace

FieldElement Field::parse(const std::string& text) const
{
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw InputError("malformed coordinate vector '" + text + "'");
        std::vector<mpq_class> coords;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
        return from_coords(coords);
    }
    return from_rational(parse_rational(s));
}

FieldElement Field::embed(const FieldElement& x) const
{
    if (x.field() == *this) return x;
    if (x.field().characteristic() != characteristic()) {
        throw MathError("cannot embed across characteristics");
    }
    if (!x.in_prime_field()) throw MathError("only prime-field elements embed into another field");
    return from_rational(x.coords()[0]);
}

std::vector<std::string> Field::automorphism_labels() const { return data_->aut_labels; }

bool Field::has_automorphism(const std::string& label) const
{
    return std::find(data_->aut_labels.begin(), data_->aut_labels.end(), label) != data_->aut_labels.end();
}

std::string Field::identity_automorphism() const { return data_->identity_label; }

FieldElement apply_matrix(const FieldElement& x, const std::vector<BasePoly>& columns)
{
    const Field& f = x.field();
    const std::size_t n = f.degree();
    Coords out(n, mpq_class(0));
    for (std::size_t a = 0; a < n; ++a) {
        if (x.coords_[a] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += x.coords_[a] * columns[a][i];
        }
    }
    for (auto& c : out) reduce(c, f.characteristic());
    return FieldElement(f, std::move(out));
}

FieldElement Field::apply(const std::string& label, const FieldElement& x) const
{
    if (!(x.field() == *this)) throw MathError("automorphism applied to an element of another field");
    auto it = std::find(data_->aut_labels.begin(), data_->aut_labels.end(), label);
    if (it == data_->aut_labels.end()) throw MathError("unknown automorphism '" + label + "'");
    return apply_matrix(x, data_->aut_columns[static_cast<std::size_t>(it - data_->aut_labels.begin())]);
}

std::string Field::compose(const std::string& a, const std::string& b) const
{
    auto it = std::find(data_->aut_labels.begin(), data_->aut_labels.end(), b);
    if (it == data_->aut_labels.end()) throw MathError("unknown automorphism '" + b + "'");
    const auto& image_b = data_->aut_images[static_cast<std::size_t>(it - data_->aut_labels.begin())];
    const FieldElement composed = apply(a, from_coords(image_b));
    for (std::size_t i = 0; i < data_->aut_labels.size(); ++i) {
        if (std::equal(composed.coords().begin(), composed.coords().end(), data_->aut_images[i].begin())) {
            return data_->aut_labels[i];
        }
    }
    throw MathError("declared automorphisms are not closed under composition (" + a + " ∘ " + b + ")");
}

FieldElement Field::element_at(const mpz_class& index) const
{
    if (!is_finite()) throw MathError("element enumeration needs a finite field");
    Coords c(data_->degree, mpq_class(0));
    mpz_class rest = index;
    for (std::size_t i = 0; i < data_->degree; ++i) {
        mpz_class digit;
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), data_->characteristic.get_mpz_t());
        c[i] = digit;
    }
    return FieldElement(*this, std::move(c));
}

std::string Field::describe() const
{
    std::string base = data_->characteristic == 0 ? "Q" : "GF(" + data_->characteristic.get_str() + ")";
    if (data_->kind != FieldKind::extension) return base;
    std::string s = base + "[x]/(";
    bool first = true;
    for (std::size_t i = data_->minpoly.size(); i-- > 0;) {
        if (data_->minpoly[i] == 0) continue;
        if (!first) s += " + ";
        first = false;
        s += data_->minpoly[i].get_str();
        if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s + ")";
}

bool operator==(const Field& a, const Field& b)
{
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    const FieldData& x = *a.data_;
    const FieldData& y = *b.data_;
    return x.kind == y.kind && x.characteristic == y.characteristic && x.minpoly == y.minpoly &&
           x.aut_labels == y.aut_labels && x.aut_images == y.aut_images;
}

// ==================================================================== FieldElement

namespace {

void require_same(const FieldElement& a, const FieldElement& b)
{
    if (!a.field().valid() || !b.field().valid()) throw MathError("arithmetic on an uninitialised field element");
    if (!(a.field() == b.field())) {
        throw MathError("field descriptor mismatch: " + a.field().describe() + " vs " + b.field().describe());
    }
}

}  // namespace

bool FieldElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool FieldElement::is_one() const
{
    if (coords_.empty() || coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool FieldElement::in_prime_field() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& b)
{
    require_same(*this, b);
    const mpz_class& p = field_.characteristic();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += b.coords_[i];
        if (p != 0) {
            if (coords_[i] >= p) coords_[i] -= p;
        }
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b)
{
    require_same(*this, b);
    const mpz_class& p = field_.characteristic();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= b.coords_[i];
        if (p != 0) {
            if (coords_[i] < 0) coords_[i] += p;
        }
    }
    return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    require_same(a, b);
    const FieldData& d = a.field_.data();
    const mpz_class& p = d.characteristic;
    const std::size_t n = d.degree;
    if (n == 1) {
        Coords c(1);
        c[0] = a.coords_[0] * b.coords_[0];
        reduce(c[0], p);
        return FieldElement(a.field_, std::move(c));
    }
    std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords_[j] == 0) continue;
            prod[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    Coords c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (prod[k] == 0) continue;
        const BasePoly& hp = d.high_powers[k - n];
        for (std::size_t i = 0; i < n; ++i) c[i] += prod[k] * hp[i];
    }
    for (auto& x : c) reduce(x, p);
    return FieldElement(a.field_, std::move(c));
}

FieldElement& FieldElement::operator*=(const FieldElement& b)
{
    *this = *this * b;
    return *this;
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = field_.zero();
    r -= *this;
    return r;
}

FieldElement FieldElement::inverse() const
{
    if (!field_.valid()) throw MathError("inverse of an uninitialised field element");
    if (is_zero()) throw MathError("division by zero");
    const FieldData& d = field_.data();
    if (d.degree == 1) {
        Coords c(1);
        c[0] = base_inverse(coords_[0], d.characteristic);
        return FieldElement(field_, std::move(c));
    }
    BasePoly a(coords_.begin(), coords_.end());
    trim(a);
    auto [g, s] = poly_xgcd(a, d.minpoly, d.characteristic);
    if (g.size() != 1) throw MathError("element is a zero divisor: minimal polynomial is reducible");
    s.resize(d.degree, mpq_class(0));
    return field_.from_coords(s);
}

FieldElement FieldElement::pow(long long e) const
{
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    FieldElement result = field_.one();
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    require_same(a, b);
    return std::equal(a.coords_.begin(), a.coords_.end(), b.coords_.begin());
}

bool canonical_less(const FieldElement& a, const FieldElement& b)
{
    // Highest coordinate is most significant, matching element_at().
    for (std::size_t i = a.coords_.size(); i-- > 0;) {
        if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
    }
    return false;
}

std::string FieldElement::to_string() const
{
    if (!field_.valid()) return "<invalid>";
    if (field_.kind() != FieldKind::extension) return coords_[0].get_str();
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].get_str();
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

// ==================================================================== roots of unity

std::optional<long long> multiplicative_order(const FieldElement& x, long long bound)
{
    if (x.is_zero()) throw MathError("zero has no multiplicative order");
    FieldElement acc = x;
    for (long long k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc *= x;
    }
    return std::nullopt;
}

std::vector<mpz_class> cyclotomic_polynomial(long long n)
{
    if (n < 1) throw MathError("cyclotomic polynomial index must be positive");
    // start with x^n - 1, divide out Φ_d for proper divisors d
    std::vector<mpz_class> f(static_cast<std::size_t>(n) + 1, mpz_class(0));
    f[0] = -1;
    f[static_cast<std::size_t>(n)] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto g = cyclotomic_polynomial(d);
        // exact division of monic integer polynomials
        std::vector<mpz_class> q(f.size() - g.size() + 1, mpz_class(0));
        std::vector<mpz_class> r = f;
        for (std::size_t k = q.size(); k-- > 0;) {
            q[k] = r[k + g.size() - 1];
            for (std::size_t i = 0; i < g.size(); ++i) r[k + i] -= q[k] * g[i];
        }
        f = std::move(q);
    }
    return f;
}

namespace {

bool has_exact_order(const FieldElement& x, long long n)
{
    if (!x.pow(n).is_one()) return false;
    long long m = n;
    for (long long r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        if (x.pow(n / r).is_one()) return false;
    }
    if (m > 1 && x.pow(n / m).is_one()) return false;
    return true;
}

}  // namespace

FieldElement roots_of_unity_subgroup(const Field& f, long long n)
{
    if (n < 1) throw MathError("root-of-unity order must be positive");
    const std::string fail = "no primitive " + std::to_string(n) + "-th root in " + f.describe();
    if (f.is_finite()) {
        const mpz_class q = f.order();
        if (mpz_class(q - 1) % mpz_class(std::to_string(n)) != 0) throw MathError(fail);
        if (q <= mpz_class(1 << 22)) {
            for (mpz_class i = 1; i < q; ++i) {
                const FieldElement x = f.element_at(i);
                if (has_exact_order(x, n)) return x;
            }
            throw MathError(fail);
        }
        const mpz_class e = mpz_class(q - 1) / mpz_class(std::to_string(n));
        for (mpz_class i = 2; i < q; ++i) {
            FieldElement c = f.element_at(i);
            FieldElement x = f.one();
            // x = c^e
            mpz_class k = e;
            FieldElement b = c;
            while (k > 0) {
                if (mpz_odd_p(k.get_mpz_t())) x *= b;
                k >>= 1;
                if (k > 0) b *= b;
            }
            if (has_exact_order(x, n)) return x;
        }
        throw MathError(fail);
    }
    // Characteristic zero: cyclotomic root test on ±1 and ± powers of the generator.
    const auto phi = cyclotomic_polynomial(n);
    auto is_root = [&](const FieldElement& c) {
        FieldElement acc = f.zero();
        for (std::size_t i = phi.size(); i-- > 0;) acc = acc * c + f.from_rational(mpq_class(phi[i]));
        return acc.is_zero();
    };
    std::vector<FieldElement> candidates{f.one(), -f.one()};
    if (f.degree() > 1) {
        const long long bound = std::max<long long>(2 * n, 4 * static_cast<long long>(f.degree() * f.degree()) + 2);
        FieldElement pw = f.one();
        for (long long j = 1; j <= bound; ++j) {
            pw *= f.generator();
            candidates.push_back(pw);
            candidates.push_back(-pw);
        }
    }
    for (const auto& c : candidates) {
        if (is_root(c)) return c;
    }
    throw MathError(fail);
}

std::optional<bool> is_irreducible(const Field& prime_field, const BasePoly& poly)
{
    BasePoly f = poly;
    for (auto& c : f) reduce(c, prime_field.characteristic());
    trim(f);
    if (f.size() < 2) return false;
    if (prime_field.characteristic() == 0) return irreducible_over_q(f);
    return irreducible_over_fp(f, prime_field.characteristic());
}

}  // namespace hforge
