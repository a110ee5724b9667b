#include "parahoric/values.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parahoric/error.hpp"

namespace parahoric::values {

namespace {

const std::string kDot = "·";    // ·
const std::string kZeta = "ζ";   // ζ
const std::string kEta = "η";    // η
const std::string kMinus = "−";  // −

Int rat_floor(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int q = n / d;
    if (n % d != 0 && (n < 0)) q -= 1;
    return q;
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
}

std::string exponent_render(const Rat& e) {
    // bare positive integers, braces for everything else
    if (boost::multiprecision::denominator(e) == 1 && e > 0)
        return "^" + rat_render(e);
    return "^{" + rat_render(e) + "}";
}

}  // namespace

Rat rat_mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

std::string rat_render(const Rat& r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        out << "/" << boost::multiprecision::denominator(r);
    return out.str();
}

Rat rat_parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("empty rational");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("bad rational: " + s);
    }
}

FormalValue FormalValue::q_power(const Rat& e) {
    FormalValue v;
    v.q_exponent = e;
    return v;
}

FormalValue FormalValue::root_of_unity(const Rat& angle) {
    FormalValue v;
    v.unity = rat_mod1(angle);
    return v;
}

FormalValue FormalValue::symbol(const std::string& name, const Int& exp) {
    FormalValue v;
    std::string canon = name;
    if (canon.rfind("eta", 0) == 0) canon = kEta + canon.substr(3);
    if (exp != 0) v.syms[canon] = exp;
    return v;
}

void FormalValue::normalize() {
    unity = rat_mod1(unity);
    for (auto it = syms.begin(); it != syms.end();)
        it = (it->second == 0) ? syms.erase(it) : std::next(it);
}

FormalValue FormalValue::mul(const FormalValue& o) const {
    FormalValue r = *this;
    r.q_exponent += o.q_exponent;
    r.unity = rat_mod1(r.unity + o.unity);
    for (const auto& [name, e] : o.syms) r.syms[name] += e;
    r.normalize();
    return r;
}

FormalValue FormalValue::inv() const {
    FormalValue r;
    r.q_exponent = -q_exponent;
    r.unity = rat_mod1(-unity);
    for (const auto& [name, e] : syms) r.syms[name] = -e;
    return r;
}

FormalValue FormalValue::pow(const Int& e) const {
    FormalValue r;
    r.q_exponent = q_exponent * Rat(e);
    r.unity = rat_mod1(unity * Rat(e));
    if (e != 0)
        for (const auto& [name, k] : syms) r.syms[name] = k * e;
    return r;
}

FormalValue operator*(const FormalValue& a, const FormalValue& b) { return a.mul(b); }

std::string FormalValue::render() const {
    std::vector<std::string> parts;
    if (q_exponent != 0) {
        if (q_exponent == 1)
            parts.push_back("q");
        else
            parts.push_back("q" + exponent_render(q_exponent));
    }
    if (unity != 0) {
        Int a = boost::multiprecision::numerator(unity);
        Int b = boost::multiprecision::denominator(unity);
        std::ostringstream out;
        out << kZeta << "_" << b;
        if (a != 1) out << "^" << a;
        parts.push_back(out.str());
    }
    for (const auto& [name, e] : syms) {
        if (e == 1)
            parts.push_back(name);
        else
            parts.push_back(name + exponent_render(Rat(e)));
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += kDot + parts[i];
    return out;
}

namespace {

struct FactorParser {
    std::string s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    std::string read_ident() {
        std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                           static_cast<unsigned char>(peek()) >= 0x80))
            ++pos;
        return s.substr(start, pos - start);
    }

    // optional ^exp; returns 1 if absent
    Rat read_exponent() {
        skip_ws();
        if (done() || peek() != '^') return Rat(1);
        ++pos;
        skip_ws();
        if (!done() && peek() == '{') {
            ++pos;
            auto close = s.find('}', pos);
            if (close == std::string::npos) throw parse_error("unterminated exponent brace");
            Rat e = rat_parse(s.substr(pos, close - pos));
            pos = close + 1;
            return e;
        }
        std::size_t start = pos;
        if (!done() && (peek() == '-' || peek() == '+')) ++pos;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos;
        if (pos == start) throw parse_error("missing exponent after ^");
        return rat_parse(s.substr(start, pos - start));
    }

    FormalValue read_factor() {
        skip_ws();
        if (done()) throw parse_error("empty factor");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = read_ident();
            if (num == "1") {
                read_exponent();  // 1^k is still 1
                return FormalValue::one();
            }
            throw parse_error("numeric literal is not a formal value: " + num);
        }
        std::string name = read_ident();
        if (name.empty()) throw parse_error("expected factor at '" + s.substr(pos) + "'");
        if (name == "q") return FormalValue::q_power(read_exponent());
        if (name == "zeta" || name.rfind("zeta_", 0) == 0) {
            std::string order = name.size() > 5 ? name.substr(5) : std::string();
            if (order.empty()) {
                skip_ws();
                if (!done() && peek() == '_') {
                    ++pos;
                    order = read_ident();
                }
            }
            if (order.empty()) throw parse_error("root of unity needs an order: " + name);
            Int b;
            try {
                b = Int(order);
            } catch (const std::runtime_error&) {
                throw parse_error("bad root-of-unity order: " + order);
            }
            if (b <= 0) throw parse_error("root-of-unity order must be positive");
            Rat e = read_exponent();
            return FormalValue::root_of_unity(e / Rat(b));
        }
        Rat e = read_exponent();
        if (boost::multiprecision::denominator(e) != 1)
            throw parse_error("symbol exponent must be an integer: " + name);
        return FormalValue::symbol(name, boost::multiprecision::numerator(e));
    }
};

}  // namespace

FormalValue parse_formal_value(const std::string& text) {
    std::string t = text;
    replace_all(t, kDot, "*");
    replace_all(t, kMinus, "-");
    replace_all(t, kZeta, "zeta");
    replace_all(t, kEta, "eta");

    FormalValue result;
    FactorParser p{t};
    p.skip_ws();
    if (p.done()) throw parse_error("empty formal value");
    if (p.peek() == '-') {  // leading sign = ζ_2
        ++p.pos;
        result = result.mul(FormalValue::root_of_unity(Rat(1, 2)));
    }
    bool expect_factor = true;
    while (true) {
        p.skip_ws();
        if (p.done()) break;
        if (p.peek() == '*') {
            if (expect_factor) throw parse_error("misplaced '*' in: " + text);
            ++p.pos;
            expect_factor = true;
            continue;
        }
        if (!expect_factor) throw parse_error("expected '*' between factors in: " + text);
        result = result.mul(p.read_factor());
        expect_factor = false;
    }
    if (expect_factor) throw parse_error("trailing operator in: " + text);

    // canonical symbol spelling uses the Greek letter
    FormalValue fixed;
    fixed.q_exponent = result.q_exponent;
    fixed.unity = result.unity;
    for (const auto& [name, e] : result.syms) {
        std::string canon = name;
        if (canon.rfind("eta", 0) == 0) canon = kEta + canon.substr(3);
        fixed.syms[canon] += e;
    }
    fixed.normalize();
    return fixed;
}

std::vector<FormalValue> parse_formal_tuple(const std::string& text) {
    std::string t = text;
    // trim whitespace and one layer of (), []
    auto first = t.find_first_not_of(" \t\n");
    auto last = t.find_last_not_of(" \t\n");
    if (first == std::string::npos) throw parse_error("empty tuple");
    t = t.substr(first, last - first + 1);
    if ((t.front() == '(' && t.back() == ')') || (t.front() == '[' && t.back() == ']'))
        t = t.substr(1, t.size() - 2);

    std::vector<FormalValue> out;
    std::string cur;
    int brace = 0;
    for (char c : t) {
        if (c == '{') ++brace;
        if (c == '}') --brace;
        if (c == ',' && brace == 0) {
            out.push_back(parse_formal_value(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(parse_formal_value(cur));
    return out;
}

std::string render_formal_tuple(const std::vector<FormalValue>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].render();
    }
    return out + ")";
}

FormalSum FormalSum::of(const FormalValue& v, const Int& coeff) {
    FormalSum s;
    s.add(v, coeff);
    return s;
}

void FormalSum::add(const FormalValue& v, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(v);
    if (it == terms.end()) {
        terms.emplace(v, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
}

void FormalSum::add(const FormalSum& o) {
    for (const auto& [v, c] : o.terms) add(v, c);
}

std::string FormalSum::render() const {
    if (terms.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [v, c] : terms) {
        Int a = c;
        if (leading) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        leading = false;
        std::ostringstream coeff;
        coeff << a;
        if (v.is_one())
            out += coeff.str();
        else if (a == 1)
            out += v.render();
        else
            out += coeff.str() + kDot + v.render();
    }
    return out;
}

TorusCharacter::TorusCharacter(FinAbGroup dom, std::vector<FormalValue> vals)
    : domain(std::move(dom)), values(std::move(vals)) {
    if (values.size() != domain.ambient_rank)
        throw invariant_error("character needs one value per ambient generator");
    for (std::size_t j = 0; j < domain.relations.cols(); ++j) {
        FormalValue v;
        for (std::size_t i = 0; i < domain.ambient_rank; ++i)
            v = v.mul(values[i].pow(domain.relations(i, j)));
        if (!v.is_one())
            throw invariant_error("character value violates relation: " + v.render());
    }
}

FormalValue TorusCharacter::evaluate(const IntVec& x) const {
    if (x.size() != domain.ambient_rank)
        throw invariant_error("element has wrong coordinate length");
    FormalValue v;
    for (std::size_t i = 0; i < x.size(); ++i) v = v.mul(values[i].pow(x[i]));
    return v;
}

TorusCharacter TorusCharacter::mul(const TorusCharacter& o) const {
    if (!(domain == o.domain)) throw invariant_error("character domains differ");
    std::vector<FormalValue> vals(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) vals[i] = values[i].mul(o.values[i]);
    return TorusCharacter(domain, std::move(vals));
}

TorusCharacter TorusCharacter::inv() const {
    std::vector<FormalValue> vals(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) vals[i] = values[i].inv();
    return TorusCharacter(domain, std::move(vals));
}

bool TorusCharacter::operator==(const TorusCharacter& o) const {
    return domain == o.domain && values == o.values;
}

bool TorusCharacter::operator<(const TorusCharacter& o) const {
    return values < o.values;  // lexicographic in the generator-value order
}

TorusCharacter act(const IntMat& w, const TorusCharacter& c) {
    std::size_t n = c.domain.ambient_rank;
    if (w.rows() != n || w.cols() != n)
        throw invariant_error("automorphism has wrong shape");
    IntMat winv = int_inverse(w);
    // w must map the relation subgroup into itself
    const IntMat& rel = c.domain.relations;
    if (rel.cols() > 0) {
        IntMat moved = w * rel;
        for (std::size_t j = 0; j < moved.cols(); ++j)
            if (!abelian::in_column_span(rel, moved.col(j)))
                throw invariant_error("automorphism does not preserve relations");
    }
    std::vector<FormalValue> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = c.evaluate(winv.col(i));
    return TorusCharacter(c.domain, std::move(vals));
}

}  // namespace parahoric::values
