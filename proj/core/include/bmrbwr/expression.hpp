#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmrbwr {

// Raised for any syntactic or semantic defect in an expression string.
class expression_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A compiled arithmetic expression over variables x1..xm.
//
// Grammar (conventional precedence, '^' is right-associative and binds
// tighter than unary minus):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-') factor | power
//   power  := atom ('^' factor)?
//   atom   := number | name | name '(' expr ')' | '(' expr ')'
// Names are the variables x1..xm, the constants pi and e, and the unary
// functions sin cos tan asin acos atan sinh cosh tanh exp log log10 sqrt
// abs floor ceil.
class expression {
public:
    static expression parse(const std::string& text, std::size_t variable_count);

    double evaluate(const std::vector<double>& x) const;

    std::size_t variable_count() const { return variable_count_; }
    const std::string& text() const { return text_; }

private:
    enum class op_code : unsigned char;
    struct instruction {
        op_code op;
        double value;       // push_const
        std::size_t index;  // push_var (zero-based)
    };

    friend class expression_parser;

    std::vector<instruction> program_;
    std::size_t variable_count_ = 0;
    std::string text_;
};

}  // namespace bmrbwr
