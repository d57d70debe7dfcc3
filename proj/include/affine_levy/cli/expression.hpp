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

#pragma once

#include <memory>
#include <string>

namespace affine_levy {

// Arithmetic expressions for scenario files: numbers, + - * / ^, parentheses,
// pi, e, one optional free variable, and the functions sqrt exp log abs
// gamma C min max pow (C(a) is the stable constant).  Parse errors throw
// SchemaError.
class Expression {
public:
    struct Node;

    static Expression parse(const std::string& text, const std::string& variable = "");

    double operator()(double x = 0.0) const;
    const std::string& text() const { return text_; }
    bool uses_variable() const { return uses_var_; }

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
    bool uses_var_ = false;
};

// Shorthand for a closed expression.
double evaluate_expression(const std::string& text);

}  // namespace affine_levy
