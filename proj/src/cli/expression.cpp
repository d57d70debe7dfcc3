// Copyright 2026 The affine-levy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affine_levy/cli/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <vector>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"

namespace affine_levy {

struct Expression::Node {
    enum class Op { num, var, neg, add, sub, mul, div, pow, call };
    Op op = Op::num;
    double value = 0.0;
    std::string fn;
    std::vector<std::shared_ptr<const Node>> args;

    double eval(double x) const {
        switch (op) {
            case Op::num: return value;
            case Op::var: return x;
            case Op::neg: return -args[0]->eval(x);
            case Op::add: return args[0]->eval(x) + args[1]->eval(x);
            case Op::sub: return args[0]->eval(x) - args[1]->eval(x);
            case Op::mul: return args[0]->eval(x) * args[1]->eval(x);
            case Op::div: return args[0]->eval(x) / args[1]->eval(x);
            case Op::pow: return std::pow(args[0]->eval(x), args[1]->eval(x));
            case Op::call: break;
        }
        const double a = args[0]->eval(x);
        if (fn == "sqrt") return std::sqrt(a);
        if (fn == "exp") return std::exp(a);
        if (fn == "log") return std::log(a);
        if (fn == "abs") return std::abs(a);
        if (fn == "gamma") return std::tgamma(a);
        if (fn == "C") return stable_constant(a);
        const double b = args[1]->eval(x);
        if (fn == "min") return std::min(a, b);
        if (fn == "max") return std::max(a, b);
        return std::pow(a, b);  // pow
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

int arity(const std::string& fn) {
    if (fn == "sqrt" || fn == "exp" || fn == "log" || fn == "abs" || fn == "gamma" || fn == "C") return 1;
    if (fn == "min" || fn == "max" || fn == "pow") return 2;
    return -1;
}

class Parser {
public:
    Parser(const std::string& s, const std::string& var) : s_(s), var_(var) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

    bool used_var = false;

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "expression \"" << s_ << "\": " << what << " at offset " << pos_;
        throw SchemaError(os.str());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Op op, std::vector<NodePtr> args, double value = 0.0, std::string fn = {}) {
        auto n = std::make_shared<Expression::Node>();
        n->op = op;
        n->args = std::move(args);
        n->value = value;
        n->fn = std::move(fn);
        return n;
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (eat('+'))
                n = make(Op::add, {n, term()});
            else if (eat('-'))
                n = make(Op::sub, {n, term()});
            else
                return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (eat('*'))
                n = make(Op::mul, {n, unary()});
            else if (eat('/'))
                n = make(Op::div, {n, unary()});
            else
                return n;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Op::neg, {unary()});
        if (eat('+')) return unary();
        NodePtr base = primary();
        if (eat('^')) return make(Op::pow, {base, unary()});
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (eat('(')) {
            NodePtr n = expr();
            if (!eat(')')) fail("missing ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            return make(Op::num, {}, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            if (eat('(')) {
                const int n = arity(id);
                if (n < 0) fail("unknown function '" + id + "'");
                std::vector<NodePtr> args{expr()};
                while (eat(',')) args.push_back(expr());
                if (!eat(')')) fail("missing ')' after arguments of " + id);
                if (static_cast<int>(args.size()) != n) fail(id + " takes " + std::to_string(n) + " argument(s)");
                return make(Op::call, std::move(args), 0.0, id);
            }
            if (!var_.empty() && id == var_) {
                used_var = true;
                return make(Op::var, {});
            }
            if (id == "pi") return make(Op::num, {}, std::numbers::pi);
            if (id == "e") return make(Op::num, {}, std::numbers::e);
            if (id == "inf") return make(Op::num, {}, HUGE_VAL);
            fail("unknown name '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const std::string& var_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text, const std::string& variable) {
    Parser p(text, variable);
    Expression e;
    e.text_ = text;
    e.root_ = p.parse();
    e.uses_var_ = p.used_var;
    return e;
}

double Expression::operator()(double x) const { return root_->eval(x); }

double evaluate_expression(const std::string& text) { return Expression::parse(text)(); }

}  // namespace affine_levy
