#include "arrcheck/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace arrcheck {

namespace {

enum class Tok { integer, symbol, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;  // integer digits or symbol name
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::end, start, ""};
            return;
        }
        unsigned char c = static_cast<unsigned char>(s_[i_]);
        if (c == 0xE2 && i_ + 2 < s_.size() && static_cast<unsigned char>(s_[i_ + 1]) == 0x88 &&
            static_cast<unsigned char>(s_[i_ + 2]) == 0x92)
            throw ParseError("Unicode minus sign U+2212; use the ASCII hyphen-minus '-'", start);
        if (c >= 0x80) throw ParseError("unexpected non-ASCII byte", start);
        if (std::isdigit(c)) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Tok::integer, start, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Tok::symbol, start, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::plus, start, "+"}; return;
            case '-': tok_ = {Tok::minus, start, "-"}; return;
            case '*': tok_ = {Tok::star, start, "*"}; return;
            case '/': tok_ = {Tok::slash, start, "/"}; return;
            case '^': tok_ = {Tok::caret, start, "^"}; return;
            case '(': tok_ = {Tok::lparen, start, "("}; return;
            case ')': tok_ = {Tok::rparen, start, ")"}; return;
            default:
                throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                                 start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Tok::end, 0, ""};
};

/// Value lattice for expression evaluation: a linear polynomial in x, y, z
/// plus a constant term. Anything of higher degree is rejected on the spot.
struct LinValue {
    FieldScalar x, y, z, k;

    bool has_var() const { return !x.is_zero() || !y.is_zero() || !z.is_zero(); }
};

class Parser {
  public:
    Parser(const std::string& text, FieldPtr field, bool allow_vars)
        : lex_(text), field_(std::move(field)), allow_vars_(allow_vars) {}

    LinValue parse() {
        LinValue v = expr();
        if (lex_.peek().kind != Tok::end)
            throw ParseError("trailing input after expression", lex_.peek().pos);
        return v;
    }

  private:
    LinValue constant(FieldScalar s) const {
        FieldScalar zero = FieldScalar::zero(field_);
        return LinValue{zero, zero, zero, std::move(s)};
    }

    LinValue expr() {
        LinValue acc = term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool add = lex_.take().kind == Tok::plus;
            LinValue rhs = term();
            if (add) {
                acc.x += rhs.x; acc.y += rhs.y; acc.z += rhs.z; acc.k += rhs.k;
            } else {
                acc.x -= rhs.x; acc.y -= rhs.y; acc.z -= rhs.z; acc.k -= rhs.k;
            }
        }
        return acc;
    }

    static bool starts_factor(Tok t) {
        return t == Tok::symbol || t == Tok::lparen;
    }

    LinValue term() {
        LinValue acc = factor();
        for (;;) {
            Tok next = lex_.peek().kind;
            if (next == Tok::star || next == Tok::slash) {
                std::size_t pos = lex_.peek().pos;
                bool mul = lex_.take().kind == Tok::star;
                LinValue rhs = factor();
                acc = mul ? multiply(acc, rhs, pos) : divide(acc, rhs, pos);
            } else if (starts_factor(next)) {
                // implicit multiplication: "2z", "t(t-1)y", "(x+y)(x-y)"
                std::size_t pos = lex_.peek().pos;
                LinValue rhs = factor();
                acc = multiply(acc, rhs, pos);
            } else {
                return acc;
            }
        }
    }

    LinValue factor() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            LinValue v = factor();
            return LinValue{-v.x, -v.y, -v.z, -v.k};
        }
        return power();
    }

    LinValue power() {
        LinValue base = atom();
        if (lex_.peek().kind != Tok::caret) return base;
        std::size_t pos = lex_.take().pos;
        Token e = lex_.peek();
        if (e.kind != Tok::integer)
            throw ParseError("exponent must be a non-negative integer literal", e.pos);
        lex_.take();
        unsigned long n = 0;
        try {
            n = std::stoul(e.text);
        } catch (...) {
            throw ParseError("exponent out of range", e.pos);
        }
        if (base.has_var()) {
            if (n == 1) return base;
            if (n == 0) return constant(FieldScalar::one(field_));
            throw ParseError("power of a variable exceeds degree 1", pos);
        }
        FieldScalar acc = FieldScalar::one(field_);
        for (unsigned long i = 0; i < n; ++i) acc *= base.k;
        return constant(acc);
    }

    LinValue atom() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::integer: {
                lex_.take();
                return constant(FieldScalar::from_rational(field_, Rational(BigInt(t.text))));
            }
            case Tok::symbol: {
                lex_.take();
                return symbol(t);
            }
            case Tok::lparen: {
                lex_.take();
                LinValue v = expr();
                if (lex_.peek().kind != Tok::rparen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return v;
            }
            case Tok::end:
                throw ParseError("unexpected end of expression", t.pos);
            default:
                throw ParseError("expected a number, symbol or '('", t.pos);
        }
    }

    LinValue symbol(const Token& t) {
        FieldScalar zero = FieldScalar::zero(field_);
        FieldScalar one = FieldScalar::one(field_);
        if (allow_vars_ && (t.text == "x" || t.text == "y" || t.text == "z")) {
            LinValue v{zero, zero, zero, zero};
            (t.text == "x" ? v.x : t.text == "y" ? v.y : v.z) = one;
            return v;
        }
        if (t.text == "e") {
            if (field_->kind() != FieldDescriptor::Kind::quadratic)
                throw ParseError("symbol 'e' needs a quadratic extension field", t.pos);
            return constant(FieldScalar::generator(field_));
        }
        if (field_->kind() == FieldDescriptor::Kind::rational_functions &&
            t.text == field_->parameter())
            return constant(FieldScalar::generator(field_));
        throw ParseError("unknown symbol '" + t.text + "' over " + field_->to_string(), t.pos);
    }

    LinValue multiply(const LinValue& a, const LinValue& b, std::size_t pos) {
        if (a.has_var() && b.has_var())
            throw ParseError("product of two variable terms exceeds degree 1", pos);
        const LinValue& varpart = a.has_var() ? a : b;
        const FieldScalar& s = a.has_var() ? b.k : a.k;
        return LinValue{varpart.x * s, varpart.y * s, varpart.z * s, varpart.k * s};
    }

    LinValue divide(const LinValue& a, const LinValue& b, std::size_t pos) {
        if (b.has_var()) throw ParseError("division by a variable term", pos);
        if (b.k.is_zero()) throw ParseError("division by zero in the expression", pos);
        FieldScalar inv = b.k.inverse();
        return LinValue{a.x * inv, a.y * inv, a.z * inv, a.k * inv};
    }

    Lexer lex_;
    FieldPtr field_;
    bool allow_vars_;
};

}  // namespace

FieldScalar parse_scalar(const std::string& text, const FieldPtr& field) {
    Parser p(text, field, /*allow_vars=*/false);
    return p.parse().k;
}

std::array<FieldScalar, 3> parse_linear_form(const std::string& text, const FieldPtr& field) {
    Parser p(text, field, /*allow_vars=*/true);
    LinValue v = p.parse();
    if (!v.k.is_zero())
        throw UsageError("not a linear form: constant term " + v.k.to_string() + " in '" + text +
                         "'");
    return {v.x, v.y, v.z};
}

namespace {
std::string scalar_factor_string(const FieldScalar& s) {
    std::string str = s.to_string();
    bool simple = str.find_first_of("+- /") == std::string::npos;
    return simple ? str : "(" + str + ")";
}
}  // namespace

std::string linear_form_to_string(const std::array<FieldScalar, 3>& form) {
    static const char* names[3] = {"x", "y", "z"};
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        const FieldScalar& c = form[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (c.is_one())
            out << names[i];
        else
            out << scalar_factor_string(c) << "*" << names[i];
    }
    if (first) out << "0";
    return out.str();
}

// ---------------------------------------------------------------------------
// Arrangement files

namespace {
using nlohmann::json;

FieldPtr field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldDescriptor::rationals();
        throw UsageError("unknown field '" + j.get<std::string>() + "' (expected \"Q\")");
    }
    if (j.is_object() && j.contains("quadratic")) {
        const json& pq = j.at("quadratic");
        if (!pq.is_array() || pq.size() != 2)
            throw UsageError("\"quadratic\" must be a [p, q] pair");
        FieldPtr q = FieldDescriptor::rationals();
        auto num = [&](const json& v) -> Rational {
            if (v.is_number_integer()) return Rational(v.get<long>());
            if (v.is_string()) return parse_scalar(v.get<std::string>(), q).rational_value();
            throw UsageError("quadratic coefficients must be integers or rational strings");
        };
        return FieldDescriptor::quadratic(num(pq[0]), num(pq[1]));
    }
    if (j.is_object() && j.contains("rational_function")) {
        const json& sym = j.at("rational_function");
        if (!sym.is_string()) throw UsageError("\"rational_function\" must name the parameter");
        return FieldDescriptor::rational_functions(sym.get<std::string>());
    }
    throw UsageError("field must be \"Q\", {\"quadratic\": [p, q]} or {\"rational_function\": \"t\"}");
}
}  // namespace

Arrangement load_arrangement_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("arrangement file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("field") || !doc.contains("lines"))
        throw UsageError("arrangement file needs \"field\" and \"lines\" keys");
    FieldPtr field = field_from_json(doc.at("field"));
    const json& jl = doc.at("lines");
    if (!jl.is_array() || jl.empty())
        throw InvalidArrangementError("\"lines\" must be a nonempty list");
    std::vector<Line> lines;
    lines.reserve(jl.size());
    for (const json& entry : jl) {
        std::array<FieldScalar, 3> triple{FieldScalar::zero(field), FieldScalar::zero(field),
                                          FieldScalar::zero(field)};
        if (entry.is_string()) {
            triple = parse_linear_form(entry.get<std::string>(), field);
        } else if (entry.is_array() && entry.size() == 3) {
            for (int i = 0; i < 3; ++i) {
                const json& v = entry[static_cast<std::size_t>(i)];
                if (v.is_number_integer())
                    triple[static_cast<std::size_t>(i)] =
                        FieldScalar::from_int(field, v.get<long>());
                else if (v.is_string())
                    triple[static_cast<std::size_t>(i)] =
                        parse_scalar(v.get<std::string>(), field);
                else
                    throw UsageError("line coefficients must be integers or expression strings");
            }
        } else {
            throw UsageError("each line must be a form string or a coefficient triple");
        }
        lines.emplace_back(triple[0], triple[1], triple[2]);
    }
    return Arrangement(field, std::move(lines));
}

Arrangement load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open arrangement file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_arrangement_text(buf.str());
}

std::string save_arrangement(const Arrangement& arr) {
    json doc;
    const FieldDescriptor& f = *arr.field();
    switch (f.kind()) {
        case FieldDescriptor::Kind::rationals:
            doc["field"] = "Q";
            break;
        case FieldDescriptor::Kind::quadratic:
            doc["field"] = {{"quadratic", {f.quad_p().to_string(), f.quad_q().to_string()}}};
            break;
        case FieldDescriptor::Kind::rational_functions:
            doc["field"] = {{"rational_function", f.parameter()}};
            break;
    }
    json lines = json::array();
    for (const Line& l : arr.lines()) lines.push_back(linear_form_to_string(l.coeffs()));
    doc["lines"] = lines;
    return doc.dump(2) + "\n";
}

}  // namespace arrcheck
