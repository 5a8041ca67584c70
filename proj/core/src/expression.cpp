#include "bmrbwr/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

namespace bmrbwr {

enum class expression::op_code : unsigned char {
    push_const,
    push_var,
    add,
    sub,
    mul,
    div,
    pow,
    neg,
    fn_sin,
    fn_cos,
    fn_tan,
    fn_asin,
    fn_acos,
    fn_atan,
    fn_sinh,
    fn_cosh,
    fn_tanh,
    fn_exp,
    fn_log,
    fn_log10,
    fn_sqrt,
    fn_abs,
    fn_floor,
    fn_ceil,
};

namespace {

const std::map<std::string, double>& constants() {
    static const std::map<std::string, double> table = {
        {"pi", 3.14159265358979323846},
        {"e", 2.71828182845904523536},
    };
    return table;
}

}  // namespace

class expression_parser {
public:
    expression_parser(const std::string& text, std::size_t variable_count)
        : text_(text), variable_count_(variable_count) {}

    expression run() {
        expression out;
        out.variable_count_ = variable_count_;
        out.text_ = text_;
        program_ = &out.program_;
        parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (program_->empty()) fail("empty expression");
        return out;
    }

private:
    using code = expression::op_code;

    void emit(code op_value) { program_->push_back({op_value, 0.0, 0}); }
    void emit_const(double v) { program_->push_back({code::push_const, v, 0}); }
    void emit_var(std::size_t index) { program_->push_back({code::push_var, 0.0, index}); }

    [[noreturn]] void fail(const std::string& message) const {
        // One-based column so the position matches what an editor shows.
        throw expression_error(message + " at position " + std::to_string(pos_ + 1) + " in '" +
                               text_ + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void parse_expr() {
        parse_term();
        for (;;) {
            if (accept('+')) {
                parse_term();
                emit(code::add);
            } else if (accept('-')) {
                parse_term();
                emit(code::sub);
            } else {
                return;
            }
        }
    }

    void parse_term() {
        parse_factor();
        for (;;) {
            if (accept('*')) {
                parse_factor();
                emit(code::mul);
            } else if (accept('/')) {
                parse_factor();
                emit(code::div);
            } else {
                return;
            }
        }
    }

    void parse_factor() {
        if (accept('-')) {
            parse_factor();
            emit(code::neg);
        } else if (accept('+')) {
            parse_factor();
        } else {
            parse_power();
        }
    }

    void parse_power() {
        parse_atom();
        if (accept('^')) {
            parse_factor();
            emit(code::pow);
        }
    }

    void parse_atom() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            parse_expr();
            expect(')');
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            parse_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            parse_name();
            return;
        }
        fail("unexpected character");
    }

    void parse_number() {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        emit_const(value);
    }

    void parse_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);

        if (name.size() >= 2 && name[0] == 'x' &&
            std::isdigit(static_cast<unsigned char>(name[1]))) {
            std::size_t digits = 0;
            const unsigned long index = std::stoul(name.substr(1), &digits);
            if (digits != name.size() - 1) fail("malformed variable '" + name + "'");
            if (index == 0 || index > variable_count_)
                fail("variable '" + name + "' out of range (expressions use x1..x" +
                     std::to_string(variable_count_) + ")");
            emit_var(index - 1);
            return;
        }

        const auto constant = constants().find(name);
        if (constant != constants().end()) {
            emit_const(constant->second);
            return;
        }

        static const std::map<std::string, code> functions = {
            {"sin", code::fn_sin},     {"cos", code::fn_cos},     {"tan", code::fn_tan},
            {"asin", code::fn_asin},   {"acos", code::fn_acos},   {"atan", code::fn_atan},
            {"sinh", code::fn_sinh},   {"cosh", code::fn_cosh},   {"tanh", code::fn_tanh},
            {"exp", code::fn_exp},     {"log", code::fn_log},     {"log10", code::fn_log10},
            {"sqrt", code::fn_sqrt},   {"abs", code::fn_abs},     {"floor", code::fn_floor},
            {"ceil", code::fn_ceil},
        };
        const auto fn = functions.find(name);
        if (fn == functions.end()) fail("unknown name '" + name + "'");
        expect('(');
        parse_expr();
        expect(')');
        emit(fn->second);
    }

    const std::string& text_;
    std::size_t variable_count_;
    std::size_t pos_ = 0;
    std::vector<expression::instruction>* program_ = nullptr;
};

expression expression::parse(const std::string& text, std::size_t variable_count) {
    return expression_parser(text, variable_count).run();
}

double expression::evaluate(const std::vector<double>& x) const {
    if (x.size() != variable_count_)
        throw std::invalid_argument("expression expects " + std::to_string(variable_count_) +
                                    " variables, got " + std::to_string(x.size()));
    std::vector<double> stack;
    stack.reserve(16);
    auto pop = [&stack]() {
        const double v = stack.back();
        stack.pop_back();
        return v;
    };
    for (const instruction& ins : program_) {
        switch (ins.op) {
            case op_code::push_const: stack.push_back(ins.value); break;
            case op_code::push_var: stack.push_back(x[ins.index]); break;
            case op_code::add: {
                const double b = pop();
                stack.back() += b;
                break;
            }
            case op_code::sub: {
                const double b = pop();
                stack.back() -= b;
                break;
            }
            case op_code::mul: {
                const double b = pop();
                stack.back() *= b;
                break;
            }
            case op_code::div: {
                const double b = pop();
                stack.back() /= b;
                break;
            }
            case op_code::pow: {
                const double b = pop();
                stack.back() = std::pow(stack.back(), b);
                break;
            }
            case op_code::neg: stack.back() = -stack.back(); break;
            case op_code::fn_sin: stack.back() = std::sin(stack.back()); break;
            case op_code::fn_cos: stack.back() = std::cos(stack.back()); break;
            case op_code::fn_tan: stack.back() = std::tan(stack.back()); break;
            case op_code::fn_asin: stack.back() = std::asin(stack.back()); break;
            case op_code::fn_acos: stack.back() = std::acos(stack.back()); break;
            case op_code::fn_atan: stack.back() = std::atan(stack.back()); break;
            case op_code::fn_sinh: stack.back() = std::sinh(stack.back()); break;
            case op_code::fn_cosh: stack.back() = std::cosh(stack.back()); break;
            case op_code::fn_tanh: stack.back() = std::tanh(stack.back()); break;
            case op_code::fn_exp: stack.back() = std::exp(stack.back()); break;
            case op_code::fn_log: stack.back() = std::log(stack.back()); break;
            case op_code::fn_log10: stack.back() = std::log10(stack.back()); break;
            case op_code::fn_sqrt: stack.back() = std::sqrt(stack.back()); break;
            case op_code::fn_abs: stack.back() = std::fabs(stack.back()); break;
            case op_code::fn_floor: stack.back() = std::floor(stack.back()); break;
            case op_code::fn_ceil: stack.back() = std::ceil(stack.back()); break;
        }
    }
    return stack.back();
}

}  // namespace bmrbwr
