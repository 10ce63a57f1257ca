#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zeon/states.hpp"

namespace zeonctl {

using zeon::Complex;
using zeon::Zeon;

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool operator==(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.value != b.value || a.var != b.var || a.exponent != b.exponent || a.name != b.name ||
        a.args.size() != b.args.size())
        return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!(*a.args[k] == *b.args[k])) return false;
    return true;
}

namespace {

NodePtr make(Node::Kind kind, std::vector<NodePtr> args = {}) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->args = std::move(args);
    return node;
}

bool is_signed_base(std::string_view base) {
    return base == "ghz2" || base == "w2" || base == "phiA" || base == "phiTilde";
}

bool is_psi(std::string_view base) {
    return base.size() == 4 && base.substr(0, 3) == "Psi" && base[3] >= '1' && base[3] <= '9';
}

class Parser {
public:
    Parser(std::string_view src, int n) : src_(src), n_(n) {}

    NodePtr run() {
        skip_space();
        if (at_end()) error("empty expression");
        NodePtr e = expr();
        skip_space();
        if (!at_end()) error(std::string("unexpected '") + peek() + "'");
        return e;
    }

private:
    // ---- cursor -----------------------------------------------------------
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
    void advance() {
        const unsigned char ch = static_cast<unsigned char>(src_[pos_++]);
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else if ((ch & 0xC0) != 0x80) {
            ++col_;
        }
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool accept(char ch) {
        skip_space();
        if (peek() != ch) return false;
        advance();
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) error(std::string("expected '") + ch + "'");
    }
    bool at_eta() const { return peek() == '\xCE' && peek(1) == '\xB7'; }

    [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, line_, col_); }
    [[noreturn]] void error_at(const std::string& msg, int line, int col) const { throw ParseError(msg, line, col); }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxDepth) p.error("expression nested deeper than " + std::to_string(kMaxDepth));
        }
        ~DepthGuard() { --p.depth_; }
    };

    // ---- grammar ----------------------------------------------------------
    NodePtr expr() {
        DepthGuard guard(*this);
        NodePtr left = term();
        for (;;) {
            if (accept('+')) left = make(Node::Kind::Add, {left, term()});
            else if (accept('-')) left = make(Node::Kind::Sub, {left, term()});
            else return left;
        }
    }

    bool starts_atom() {
        skip_space();
        const char ch = peek();
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '(' || ch == '@' ||
               std::isalpha(static_cast<unsigned char>(ch)) || at_eta();
    }

    NodePtr term() {
        NodePtr left = unary();
        for (;;) {
            if (accept('*')) left = make(Node::Kind::Mul, {left, unary()});
            else if (accept('/')) left = make(Node::Kind::Div, {left, unary()});
            else if (starts_atom()) left = make(Node::Kind::Mul, {left, unary()});
            else return left;
        }
    }

    NodePtr unary() {
        DepthGuard guard(*this);
        if (accept('-')) return make(Node::Kind::Neg, {unary()});
        if (accept('+')) return unary();
        NodePtr base = atom();
        if (accept('^')) {
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) error("exponent must be a nonnegative integer");
            unsigned long k = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                k = k * 10 + static_cast<unsigned long>(peek() - '0');
                if (k > 1000000) error("exponent too large");
                advance();
            }
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::Pow;
            node->exponent = static_cast<unsigned>(k);
            node->args = {base};
            return node;
        }
        return base;
    }

    NodePtr atom() {
        skip_space();
        const int line = line_, col = col_;
        const char ch = peek();
        if (at_end()) error("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
        if (ch == '(') {
            advance();
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (ch == '@') {
            advance();
            return state_ref(line, col);
        }
        if (at_eta()) {
            advance();
            advance();
            return variable(line, col);
        }
        if (ch == 'e' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            advance();
            return variable(line, col);
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string word;
            while (std::isalnum(static_cast<unsigned char>(peek()))) {
                word += peek();
                advance();
            }
            if (word == "i") return make(Node::Kind::Imag);
            if (word == "exp" || word == "log" || word == "cos" || word == "sin" || word == "sqrt") {
                expect('(');
                auto node = std::make_shared<Node>();
                node->kind = Node::Kind::Func;
                node->name = word;
                node->args = {expr()};
                expect(')');
                return node;
            }
            error_at("unknown identifier '" + word + "'", line, col);
        }
        error(std::string("unexpected '") + ch + "'");
    }

    NodePtr number() {
        std::string text;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            text += peek();
            advance();
        }
        if (peek() == '.') {
            text += '.';
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                text += peek();
                advance();
            }
        }
        if (text == ".") error("malformed number");
        // upper-case exponent only: a lower-case e starts a variable
        const bool sign = peek(1) == '+' || peek(1) == '-';
        if (peek() == 'E' && std::isdigit(static_cast<unsigned char>(peek(sign ? 2 : 1)))) {
            text += 'E';
            advance();
            if (sign) {
                text += peek();
                advance();
            }
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                text += peek();
                advance();
            }
        }
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Number;
        node->value = std::strtod(text.c_str(), nullptr);
        return node;
    }

    NodePtr variable(int line, int col) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("variable index expected");
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = std::min(v * 10 + (peek() - '0'), 1000);
            advance();
        }
        if (v < 1 || v > n_)
            error_at("undeclared variable e" + std::to_string(v) + " (n = " + std::to_string(n_) + ")", line, col);
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Var;
        node->var = v;
        return node;
    }

    NodePtr state_ref(int line, int col) {
        std::string base;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            base += peek();
            advance();
        }
        if (base.empty()) error("state name expected after '@'");
        if ((peek() == '+' || peek() == '-') && is_signed_base(base)) {
            base += peek();
            advance();
        }
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::State;
        if (is_psi(base)) {
            node->name = base;
            if (accept('(')) {
                DepthGuard guard(*this);
                do node->args.push_back(expr());
                while (accept(','));
                expect(')');
            }
            const int need = zeon::states::psi_param_count(base[3] - '0');
            if (static_cast<int>(node->args.size()) != need && node->args.size() != 4)
                error_at(base + " takes " + std::to_string(need) + " parameters", line, col);
        } else {
            std::string name = base;
            if (peek() == '(') {
                while (!at_end() && peek() != ')') {
                    name += peek();
                    advance();
                }
                if (at_end()) error("unterminated index list");
                name += ')';
                advance();
            }
            try {
                (void)zeon::states::by_name(name);
            } catch (const zeon::Error& e) {
                error_at(e.what(), line, col);
            }
            node->name = name;
        }
        const int need_vars = zeon::states::variable_count(node->name);
        if (need_vars > n_)
            error_at("state @" + node->name + " needs " + std::to_string(need_vars) + " variables", line, col);
        return node;
    }

    std::string_view src_;
    int n_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    int depth_ = 0;
};

std::string number_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    for (char& ch : s)
        if (ch == 'e') ch = 'E';
    return s;
}

Complex scalar_of(const Zeon& z, const char* what) {
    if (!z.soul().is_zero())
        zeon::fail(zeon::ErrorKind::InvalidArgument, std::string(what) + " takes a scalar argument");
    return z.body();
}

}  // namespace

NodePtr parse(std::string_view src, int n) {
    if (n < 1 || n > kMaxCliVars) throw ParseError("n must be between 1 and " + std::to_string(kMaxCliVars), 1, 1);
    return Parser(src, n).run();
}

std::string print(const Node& node) {
    auto bin = [&](const char* op) { return "(" + print(*node.args[0]) + " " + op + " " + print(*node.args[1]) + ")"; };
    switch (node.kind) {
        case Node::Kind::Number: return number_text(node.value);
        case Node::Kind::Imag: return "i";
        case Node::Kind::Var: return "e" + std::to_string(node.var);
        case Node::Kind::Neg: return "-(" + print(*node.args[0]) + ")";
        case Node::Kind::Add: return bin("+");
        case Node::Kind::Sub: return bin("-");
        case Node::Kind::Mul: return bin("*");
        case Node::Kind::Div: return bin("/");
        case Node::Kind::Pow: return "(" + print(*node.args[0]) + ")^" + std::to_string(node.exponent);
        case Node::Kind::Func: return node.name + "(" + print(*node.args[0]) + ")";
        case Node::Kind::State: {
            std::string out = "@" + node.name;
            if (!node.args.empty()) {
                out += "(";
                for (std::size_t k = 0; k < node.args.size(); ++k) out += (k ? ", " : "") + print(*node.args[k]);
                out += ")";
            }
            return out;
        }
    }
    return {};
}

Zeon evaluate(const Node& node, int n) {
    const zeon::Context ctx(n);
    auto arg = [&](std::size_t k) { return evaluate(*node.args[k], n); };
    switch (node.kind) {
        case Node::Kind::Number: return Zeon::constant(ctx, node.value);
        case Node::Kind::Imag: return Zeon::constant(ctx, Complex(0, 1));
        case Node::Kind::Var: return Zeon::variable(ctx, node.var);
        case Node::Kind::Neg: return -arg(0);
        case Node::Kind::Add: return arg(0) + arg(1);
        case Node::Kind::Sub: return arg(0) - arg(1);
        case Node::Kind::Mul: return arg(0) * arg(1);
        case Node::Kind::Div: return arg(0) * zeon::invert(arg(1));
        case Node::Kind::Pow: return zeon::power(arg(0), node.exponent);
        case Node::Kind::Func: {
            const Zeon a = arg(0);
            if (node.name == "exp") return zeon::exp(a);
            if (node.name == "log") return zeon::log(a);
            if (node.name == "cos") return zeon::cos(a);
            if (node.name == "sin") return zeon::sin(a);
            return Zeon::constant(ctx, std::sqrt(scalar_of(a, "sqrt")));
        }
        case Node::Kind::State: {
            std::vector<Complex> params;
            for (std::size_t k = 0; k < node.args.size(); ++k) params.push_back(scalar_of(arg(k), "state parameter"));
            const Zeon s = zeon::states::by_name(node.name, params);
            return s.vars() == n ? s : zeon::embed(s, ctx);
        }
    }
    zeon::fail(zeon::ErrorKind::Internal, "unknown expression node");
}

std::string format_zeon(const Zeon& f, double tol) {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };
    std::string out;
    for (zeon::Mask m = 0; m < f.size(); ++m) {
        const Complex c = f[m];
        if (std::abs(c) <= tol) continue;
        std::string mono;
        for (int v = 1; v <= f.vars(); ++v)
            if (m & zeon::bit(v)) mono += (mono.empty() ? "e" : "*e") + std::to_string(v);
        const bool re = std::abs(c.real()) > tol, im = std::abs(c.imag()) > tol;
        bool negative = false;
        std::string coef;
        if (re && im) {
            coef = "(" + num(c.real()) + (c.imag() < 0 ? "-" : "+") + num(std::abs(c.imag())) + "i)";
        } else if (re) {
            negative = c.real() < 0;
            coef = std::abs(std::abs(c.real()) - 1.0) <= tol && !mono.empty() ? "" : num(std::abs(c.real()));
        } else {
            negative = c.imag() < 0;
            coef = (std::abs(std::abs(c.imag()) - 1.0) <= tol ? "" : num(std::abs(c.imag()))) + "i";
        }
        std::string termtext = coef;
        if (!mono.empty()) termtext += (coef.empty() ? "" : "*") + mono;
        if (out.empty()) out = (negative ? "-" : "") + termtext;
        else out += (negative ? " - " : " + ") + termtext;
    }
    return out.empty() ? "0" : out;
}

}  // namespace zeonctl
