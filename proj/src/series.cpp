#include "hilbcell/series.hpp"

#include <cctype>
#include <stdexcept>

namespace hilbcell {

std::string format_rational(const Rational& v) {
    return v.get_str();
}

int VarTable::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
}

std::optional<int> VarTable::find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

LinExpr LinExpr::variable(int id) {
    LinExpr e;
    e.terms_.emplace(id, Rational(1));
    return e;
}

LinExpr LinExpr::operator-() const {
    LinExpr out;
    out.constant_ = -constant_;
    for (const auto& [v, c] : terms_) out.terms_.emplace(v, -c);
    return out;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    constant_ += o.constant_;
    for (const auto& [v, c] : o.terms_) {
        auto it = terms_.find(v);
        if (it == terms_.end()) {
            terms_.emplace(v, c);
            continue;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
    return *this += -o;
}

LinExpr operator*(const LinExpr& a, const LinExpr& b) {
    if (!a.is_constant() && !b.is_constant())
        throw std::logic_error("LinExpr: product of two non-constant expressions");
    const LinExpr& lin = a.is_constant() ? b : a;
    const Rational& s = a.is_constant() ? a.constant_ : b.constant_;
    LinExpr out;
    if (s == 0) return out;
    out.constant_ = lin.constant_ * s;
    for (const auto& [v, c] : lin.terms_) out.terms_.emplace(v, c * s);
    return out;
}

LinExpr LinExpr::substituted(int var, const LinExpr& value) const {
    auto it = terms_.find(var);
    if (it == terms_.end()) return *this;
    const Rational c = it->second;
    LinExpr out = *this;
    out.terms_.erase(var);
    return out + LinExpr(c) * value;
}

LinExpr LinExpr::solved_for(int var) const {
    auto it = terms_.find(var);
    if (it == terms_.end() || it->second == 0)
        throw std::logic_error("LinExpr: variable does not occur, cannot solve");
    const Rational c = it->second;
    LinExpr rest = *this;
    rest.terms_.erase(var);
    return LinExpr(Rational(-1) / c) * rest;
}

std::string LinExpr::str(const VarTable& vars) const {
    if (is_constant()) return format_rational(constant_);
    std::string out;
    bool first = true;
    if (constant_ != 0) {
        out = format_rational(constant_);
        first = false;
    }
    for (const auto& [v, c] : terms_) {
        if (first) {
            if (c == -1)
                out += "-";
            else if (c != 1)
                out += format_rational(c) + " ";
            first = false;
        } else {
            const bool neg = c < 0;
            out += neg ? " - " : " + ";
            const Rational mag = neg ? Rational(-c) : c;
            if (mag != 1) out += format_rational(mag) + " ";
        }
        out += vars.name(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("series parse error at position " + std::to_string(pos) +
                                    ": " + what + " in \"" + std::string(text) + "\"");
    }

    std::string read_digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    Rational read_number() {
        std::string num = read_digits();
        skip_ws();
        if (!done() && peek() == '/') {
            ++pos;
            skip_ws();
            std::string den = read_digits();
            if (Rational(den) == 0) fail("zero denominator");
            Rational v(num + "/" + den);
            v.canonicalize();
            return v;
        }
        return Rational(num);
    }
};

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// item := number | ident | 't' ['^' digits]; a lone 't' (not followed by an
// identifier character) is the series variable.
struct Item {
    enum class Kind { number, symbol, power } kind;
    Rational number;
    std::string symbol;
    Int exponent = 0;
};

std::optional<Item> read_item(Cursor& cur, bool first_in_term) {
    cur.skip_ws();
    if (cur.done()) return std::nullopt;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        Item it{Item::Kind::number, cur.read_number(), {}, 0};
        return it;
    }
    if (c == 't' && (cur.pos + 1 >= cur.text.size() || !is_ident_char(cur.text[cur.pos + 1]))) {
        ++cur.pos;
        Item it{Item::Kind::power, Rational(0), {}, 1};
        cur.skip_ws();
        if (!cur.done() && cur.peek() == '^') {
            ++cur.pos;
            cur.skip_ws();
            it.exponent = Int(std::stoll(cur.read_digits()));
        }
        return it;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = cur.pos;
        while (!cur.done() && is_ident_char(cur.peek())) ++cur.pos;
        Item it{Item::Kind::symbol, Rational(0),
                std::string(cur.text.substr(start, cur.pos - start)), 0};
        return it;
    }
    if (first_in_term) cur.fail(std::string("unexpected character '") + c + "'");
    return std::nullopt;
}

} // namespace

SymbolicSeries parse_series(std::string_view text, VarTable& vars) {
    Cursor cur{text};
    SymbolicSeries out;
    cur.skip_ws();
    if (cur.done()) cur.fail("empty series");
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
        negative = cur.peek() == '-';
        ++cur.pos;
    }
    for (;;) {
        // One term: multiply items separated by optional '*'.
        Rational coeff(1);
        std::optional<std::string> symbol;
        Int exponent = 0;
        bool first = true;
        for (;;) {
            cur.skip_ws();
            if (!first && !cur.done() && cur.peek() == '*') {
                ++cur.pos;
                cur.skip_ws();
            }
            auto item = read_item(cur, first);
            if (!item) {
                if (first) cur.fail("expected a term");
                break;
            }
            switch (item->kind) {
                case Item::Kind::number: coeff *= item->number; break;
                case Item::Kind::power: exponent += item->exponent; break;
                case Item::Kind::symbol:
                    if (symbol)
                        cur.fail("product of two symbols '" + *symbol + "' and '" +
                                 item->symbol + "' is not affine-linear");
                    symbol = item->symbol;
                    break;
            }
            first = false;
        }
        LinExpr value = symbol ? LinExpr(coeff) * LinExpr::variable(vars.intern(*symbol))
                               : LinExpr(coeff);
        if (negative) value = -value;
        out.add_term(exponent, std::move(value));

        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() == '+' || cur.peek() == '-') {
            negative = cur.peek() == '-';
            ++cur.pos;
            continue;
        }
        cur.fail(std::string("unexpected character '") + cur.peek() + "'");
    }
    return out;
}

RationalSeries parse_rational_series(std::string_view text) {
    VarTable vars;
    SymbolicSeries s = parse_series(text, vars);
    if (vars.size() != 0)
        throw std::invalid_argument("series: symbolic coefficient '" + vars.name(0) +
                                    "' not allowed here");
    return to_rational(s);
}

std::vector<RationalSeries> parse_series_list(std::string_view text) {
    std::vector<RationalSeries> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            out.push_back(parse_rational_series(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

RationalSeries to_rational(const SymbolicSeries& f) {
    RationalSeries out = RationalSeries(f.horizon());
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("series: coefficient at t^" + std::to_string(e) +
                                        " is symbolic");
        out.add_term(e, c.constant());
    }
    return out;
}

SymbolicSeries to_symbolic(const RationalSeries& f) {
    SymbolicSeries out = SymbolicSeries(f.horizon());
    for (const auto& [e, c] : f.terms()) out.add_term(e, LinExpr(c));
    return out;
}

namespace {

std::string power_str(Int e) {
    if (e == 0) return "1";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

} // namespace

std::string format_series(const RationalSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0)
            out += format_rational(mag);
        else if (mag == 1)
            out += power_str(e);
        else
            out += format_rational(mag) + " " + power_str(e);
    }
    return out;
}

std::string format_series(const SymbolicSeries& f, const VarTable& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (c.is_constant()) {
            const Rational& v = c.constant();
            const bool neg = v < 0;
            const Rational mag = neg ? Rational(-v) : v;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (e == 0)
                out += format_rational(mag);
            else if (mag == 1)
                out += power_str(e);
            else
                out += format_rational(mag) + " " + power_str(e);
            continue;
        }
        if (!out.empty()) out += " + ";
        const bool simple = c.constant() == 0 && c.terms().size() == 1 &&
                            c.terms().begin()->second == 1;
        if (simple)
            out += vars.name(c.terms().begin()->first);
        else
            out += "(" + c.str(vars) + ")";
        if (e != 0) out += " " + power_str(e);
    }
    return out;
}

} // namespace hilbcell
