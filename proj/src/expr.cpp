#include "lpadecomp/expr.hpp"

#include "lpadecomp/errors.hpp"

#include <cctype>

namespace lpadecomp {

namespace {

class Parser {
  public:
    Parser(const SteinbergAlgebra& alg, std::string_view text, const std::optional<VertexSet>& H)
        : alg_(alg), g_(alg.graph()), text_(text), H_(H) {}

    AlgebraElement parse() {
        AlgebraElement result = expr();
        skip_space();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return alg_.normalize(result);
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        throw InputError("expression: " + msg + " at column " + std::to_string(at + 1));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    bool at_factor() {
        skip_space();
        return pos_ < text_.size() && (ident_start(text_[pos_]) || text_[pos_] == '(');
    }

    AlgebraElement expr() {
        AlgebraElement acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        AlgebraElement t = term();
        acc = negate ? alg_.scale(t, -1) : t;
        for (;;) {
            if (accept('+'))
                acc = alg_.add(acc, term());
            else if (accept('-'))
                acc = alg_.subtract(acc, term());
            else
                return acc;
        }
    }

    AlgebraElement term() {
        skip_space();
        std::optional<Scalar> coeff;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            coeff = coefficient();
        if (!at_factor())
            fail("expected a vertex, edge, vh(...) or '('");
        AlgebraElement acc = factor();
        while (at_factor())
            acc = alg_.product(acc, factor());
        return coeff ? alg_.scale(acc, alg_.field().reduce(*coeff)) : acc;
    }

    std::string digits() {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (begin == pos_)
            fail("expected a number");
        return std::string(text_.substr(begin, pos_ - begin));
    }

    Scalar coefficient() {
        const std::size_t at = pos_;
        mpz_class num(digits());
        mpz_class den = 1;
        if (accept('/')) {
            skip_space();
            den = mpz_class(digits());
            if (den == 0)
                fail_at(at, "zero denominator");
        }
        Scalar q(num, den);
        q.canonicalize();
        try {
            return alg_.field().reduce(q);
        } catch (const InputError& e) {
            fail_at(at, e.what());
        }
    }

    std::string identifier() {
        skip_space();
        const std::size_t begin = pos_;
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            fail("expected an identifier");
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(begin, pos_ - begin));
    }

    AlgebraElement factor() {
        if (accept('(')) {
            AlgebraElement inner = expr();
            expect(')');
            return inner;
        }
        skip_space();
        const std::size_t at = pos_;
        const std::string name = identifier();
        if (name == "vh" && peek('('))
            return relative_vertex();

        std::optional<std::uint64_t> index;
        if (accept('[')) {
            skip_space();
            const std::size_t idx_at = pos_;
            const std::string d = digits();
            if (d.size() > 18)
                fail_at(idx_at, "edge index too large");
            index = std::stoull(d);
            expect(']');
        }
        const bool star = accept('*');

        if (auto v = g_.find_vertex(name)) {
            if (index)
                fail_at(at, "vertex '" + name + "' takes no index");
            return alg_.vertex(*v); // v* = v
        }
        auto b = g_.find_bundle(name);
        if (!b)
            fail_at(at, "unknown vertex or bundle '" + name + "'");
        const EdgeRef e{*b, index.value_or(0)};
        const Multiplicity m = g_.bundle(*b).multiplicity;
        if (m.is_finite() && e.index >= m.value())
            fail_at(at, "index " + std::to_string(e.index) + " out of range for bundle '" + name + "' of multiplicity " +
                            m.to_string());
        return star ? alg_.ghost(e) : alg_.edge(e);
    }

    AlgebraElement relative_vertex() {
        const std::size_t at = pos_;
        expect('(');
        skip_space();
        const std::size_t name_at = pos_;
        const std::string name = identifier();
        expect(')');
        if (!H_)
            fail_at(at, "vh(...) needs --H");
        auto v = g_.find_vertex(name);
        if (!v)
            fail_at(name_at, "unknown vertex '" + name + "'");
        if (!breaking_vertices(g_, *H_).contains(*v))
            fail_at(name_at, "'" + name + "' is not a breaking vertex of H=" + g_.format_set(*H_));
        return alg_.vertex_relative(*v, *H_);
    }

    const SteinbergAlgebra& alg_;
    const Graph& g_;
    std::string_view text_;
    const std::optional<VertexSet>& H_;
    std::size_t pos_ = 0;
};

} // namespace

AlgebraElement parse_expression(const SteinbergAlgebra& alg, std::string_view text, const std::optional<VertexSet>& H) {
    return Parser(alg, text, H).parse();
}

} // namespace lpadecomp
