#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeon/zeon.hpp"

namespace zeonctl {

inline constexpr int kMaxCliVars = 9;
inline constexpr int kMaxDepth = 64;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Number, Imag, Var, Neg, Add, Sub, Mul, Div, Pow, Func, State };

    Kind kind;
    double value = 0;            // Number
    int var = 0;                 // Var
    unsigned exponent = 0;       // Pow
    std::string name;            // Func: exp/log/cos/sin/sqrt; State: base name with index suffix
    std::vector<NodePtr> args;   // operands, or State parameters

    friend bool operator==(const Node& a, const Node& b);
};

NodePtr parse(std::string_view src, int n);
std::string print(const Node& node);
zeon::Zeon evaluate(const Node& node, int n);

// "0.5 + 0.5*e1*e2" style rendering for human output.
std::string format_zeon(const zeon::Zeon& f, double tol = zeon::kDefaultTol);

}  // namespace zeonctl
