#include "poskit/spec_parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "poskit/errors.hpp"

namespace poskit {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupSpec parse()
    {
        GroupSpec spec = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail({"x", "end of input"});
        return spec;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        throw SpecSyntaxError(pos_, std::move(expected));
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail({std::string(1, c)});
        ++pos_;
    }

    std::uint64_t parse_int()
    {
        skip_ws();
        if (pos_ >= text_.size()
            || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({"integer"});
        constexpr std::uint64_t limit = (std::uint64_t{1} << 63) - 1;
        std::uint64_t v = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > limit / 10 || v * 10 > limit - digit)
                throw IntegerOverflowError("integer literal exceeds 2^63 - 1");
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    GroupSpec parse_expr()
    {
        std::vector<GroupSpec> factors;
        factors.push_back(parse_term());
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'x')
                break;
            ++pos_;
            factors.push_back(parse_term());
        }
        if (factors.size() == 1)
            return std::move(factors.front());
        return GroupSpec::product(std::move(factors));
    }

    GroupSpec parse_term()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            GroupSpec inner = parse_expr();
            expect(')');
            return inner;
        }
        const std::size_t name_at = pos_;
        std::string name;
        while (pos_ < text_.size()
               && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name.push_back(text_[pos_++]);
        if (name == "Z") {
            expect('(');
            const std::uint64_t n = parse_int();
            expect(')');
            return GroupSpec::cyclic(n);
        }
        if (name == "S") {
            expect('(');
            const std::uint64_t n = parse_int();
            expect(')');
            return GroupSpec::symmetric(n);
        }
        if (name == "Sd") {
            expect('(');
            const std::uint64_t a = parse_int();
            expect(',');
            const std::uint64_t b = parse_int();
            expect(',');
            const std::uint64_t u = parse_int();
            expect(')');
            return GroupSpec::semidirect(a, b, u);
        }
        pos_ = name_at;
        fail({"Z", "S", "Sd", "("});
    }
};

void print_node(const GroupSpec& spec, std::string& out)
{
    if (const auto* c = std::get_if<CyclicSpec>(&spec.node)) {
        out += "Z(" + std::to_string(c->n) + ")";
    } else if (const auto* s = std::get_if<SymmetricSpec>(&spec.node)) {
        out += "S(" + std::to_string(s->n) + ")";
    } else if (const auto* d = std::get_if<SemidirectSpec>(&spec.node)) {
        out += "Sd(" + std::to_string(d->a) + "," + std::to_string(d->b) + ","
             + std::to_string(d->u) + ")";
    } else {
        const auto& p = std::get<ProductSpec>(spec.node);
        if (p.factors.size() == 1) {
            print_node(p.factors.front(), out);
            return;
        }
        bool first = true;
        for (const auto& f : p.factors) {
            if (!first)
                out += " x ";
            first = false;
            const bool nested = std::holds_alternative<ProductSpec>(f.node)
                && std::get<ProductSpec>(f.node).factors.size() > 1;
            if (nested) {
                out += "(";
                print_node(f, out);
                out += ")";
            } else {
                print_node(f, out);
            }
        }
    }
}

} // namespace

GroupSpec parse_spec(std::string_view text)
{
    return Parser(text).parse();
}

std::string print_spec(const GroupSpec& spec)
{
    std::string out;
    print_node(spec, out);
    return out;
}

} // namespace poskit
