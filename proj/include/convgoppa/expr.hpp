/*
   Copyright 2026 The convgoppa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVGOPPA_EXPR_HPP
#define CONVGOPPA_EXPR_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convgoppa/gf.hpp"

namespace convgoppa {

/// Polynomial expression over a field in the parameters l0, l1, ... (`l`
/// abbreviates l0) and the generator `a`. Integers are read mod p.
class Condition {
  public:
    static Condition parse(const FieldPtr& field, std::string_view text) {
        Parser ps{field.get(), text, 0};
        auto node = ps.sum();
        ps.skip();
        if (ps.pos != text.size())
            throw Error(ErrorKind::Parse, "unexpected '" + std::string(text.substr(ps.pos, 1)) + "' in condition '" +
                                              std::string(text) + "'");
        Condition c;
        c.field_ = field;
        c.root_ = std::move(node);
        c.text_ = std::string(detail::trim_view(text));
        c.arity_ = ps.arity;
        return c;
    }

    /// Value at the parameter tuple; tuples shorter than arity() are rejected.
    elem_t operator()(std::span<const elem_t> params) const {
        if (params.size() < arity_)
            throw Error(ErrorKind::InvalidArgument, "condition '" + text_ + "' needs " + std::to_string(arity_) +
                                                        " parameters");
        return eval(*root_, params);
    }

    const std::string& text() const noexcept { return text_; }
    std::size_t arity() const noexcept { return arity_; }
    const FieldPtr& field() const noexcept { return field_; }

  private:
    enum class Op { Const, Var, Add, Sub, Mul, Neg, Pow };
    struct Node {
        Op op;
        elem_t value = 0;
        std::size_t index = 0;
        std::shared_ptr<const Node> lhs, rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;

    struct Parser {
        const FiniteField* f;
        std::string_view s;
        std::size_t pos;
        std::size_t arity = 0;

        void skip() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        [[noreturn]] void fail(const std::string& what) const {
            throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
        }
        std::size_t number() {
            const std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::uint64_t n = 0;
            if (start == pos || !detail::parse_uint(s.substr(start, pos - start), n)) fail("expected a number");
            return static_cast<std::size_t>(n);
        }
        static NodePtr make(Op op, NodePtr a, NodePtr b = nullptr) {
            return std::make_shared<const Node>(Node{op, 0, 0, std::move(a), std::move(b)});
        }
        NodePtr sum() {
            NodePtr acc;
            skip();
            if (eat('-')) acc = make(Op::Neg, product());
            else {
                eat('+');
                acc = product();
            }
            while (true) {
                if (eat('+')) acc = make(Op::Add, acc, product());
                else if (eat('-')) acc = make(Op::Sub, acc, product());
                else return acc;
            }
        }
        NodePtr product() {
            NodePtr acc = power();
            while (eat('*')) acc = make(Op::Mul, acc, power());
            return acc;
        }
        NodePtr power() {
            NodePtr base = atom();
            if (eat('^')) {
                skip();
                auto n = std::make_shared<Node>(Node{Op::Pow, 0, number(), base, nullptr});
                return n;
            }
            return base;
        }
        NodePtr atom() {
            skip();
            if (pos >= s.size()) fail("unexpected end");
            const char c = s[pos];
            if (c == '(') {
                ++pos;
                auto inner = sum();
                if (!eat(')')) fail("expected ')'");
                return inner;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const std::size_t n = number();
                return std::make_shared<const Node>(Node{Op::Const, f->from_int(static_cast<long long>(n % f->characteristic())), 0, nullptr, nullptr});
            }
            if (c == 'a') {
                ++pos;
                return std::make_shared<const Node>(Node{Op::Const, f->generator(), 0, nullptr, nullptr});
            }
            if (c == 'l') {
                ++pos;
                std::size_t idx = 0;
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) idx = number();
                arity = std::max(arity, idx + 1);
                return std::make_shared<const Node>(Node{Op::Var, 0, idx, nullptr, nullptr});
            }
            fail("unexpected character '" + std::string(1, c) + "'");
        }
    };

    elem_t eval(const Node& n, std::span<const elem_t> p) const {
        const FiniteField& f = *field_;
        switch (n.op) {
            case Op::Const: return n.value;
            case Op::Var: return p[n.index];
            case Op::Add: return f.add(eval(*n.lhs, p), eval(*n.rhs, p));
            case Op::Sub: return f.sub(eval(*n.lhs, p), eval(*n.rhs, p));
            case Op::Mul: return f.mul(eval(*n.lhs, p), eval(*n.rhs, p));
            case Op::Neg: return f.neg(eval(*n.lhs, p));
            case Op::Pow: return f.pow(eval(*n.lhs, p), n.index);
        }
        throw Error(ErrorKind::Internal, "bad expression node");
    }

    FieldPtr field_;
    NodePtr root_;
    std::string text_;
    std::size_t arity_ = 0;
};

/// Conditions separated by ';'.
inline std::vector<Condition> parse_conditions(const FieldPtr& field, std::string_view text) {
    std::vector<Condition> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(';', start), text.size());
        const auto piece = detail::trim_view(text.substr(start, end - start));
        if (!piece.empty()) out.push_back(Condition::parse(field, piece));
        start = end + 1;
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "no conditions given");
    return out;
}

}  // namespace convgoppa

#endif
