#pragma once

#include "s2cobar/algebra/axioms.hpp"
#include "s2cobar/ce/lie.hpp"
#include "s2cobar/io/presented.hpp"
#include "s2cobar/s2/identities.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Line-oriented text formats.  One statement per line, '#' starts a comment.
//
//   kind bialgebra            algebra | coalgebra | bialgebra | s2-algebra | lie
//   ring z                    z | q | zmod:m (also z2, z3, ...)
//   basis 1:0 v:2 vv:4        name:degree, repeatable
//   unit 1
//   d b = a                   differential, degree -1
//   product v * v = 2 vv
//   coproduct vv = 2 v|v      reduced coproduct
//   brace x{x} = -x           x{y1,...,yn}, degree |x| + Σ|yi| + n
//   bracket [x,y] = z         Lie files only
//
// Right-hand sides are sums of terms "[coefficient] atom" with integer or
// p/q coefficients separated from the atom by a space, or the literal 0.

namespace s2cobar {

namespace detail {

class StatementCursor {
public:
    StatementCursor(std::string_view text, int line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& message, std::size_t at) const
    {
        throw SchemaError("line " + std::to_string(line_) + ", column " + std::to_string(at + 1) + ": " + message);
    }
    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t pos()
    {
        skip_space();
        return pos_;
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    static bool name_char(char c)
    {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_' || c == '\'' || c == '^' || c == '.' || u >= 0x80;
    }
    std::string name()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_]))
            ++pos_;
        if (start == pos_)
            fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }
    std::string word()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a value");
        return std::string(text_.substr(start, pos_ - start));
    }
    int integer()
    {
        skip_space();
        std::size_t start = pos_;
        std::string w;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            w += text_[pos_++];
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            w += text_[pos_++];
        if (w.empty() || w == "-" || w == "+")
            fail("expected an integer", start);
        return std::stoi(w);
    }

    /// A coefficient "n" or "p/q" followed by whitespace and a name; returns
    /// nothing (and consumes nothing) otherwise.
    std::optional<Scalar> coefficient()
    {
        skip_space();
        std::size_t p = pos_;
        while (p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '/'))
            ++p;
        if (p == pos_ || p >= text_.size() || !std::isspace(static_cast<unsigned char>(text_[p])))
            return std::nullopt;
        std::size_t q = p;
        while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q])))
            ++q;
        if (q >= text_.size() || !name_char(text_[q]))
            return std::nullopt;
        std::string w(text_.substr(pos_, p - pos_));
        std::size_t slash = w.find('/');
        Scalar value;
        try {
            if (slash == std::string::npos)
                value = Scalar(Integer(w));
            else {
                Integer den(w.substr(slash + 1));
                if (den == 0)
                    fail("zero denominator");
                value = Scalar(Integer(w.substr(0, slash)), den);
            }
        }
        catch (const SchemaError&) {
            throw;
        }
        catch (const std::exception&) {
            fail("bad coefficient '" + w + "'");
        }
        pos_ = p;
        return value;
    }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

/// Parses "0" or a signed sum of terms; `atom` reads one basis atom and
/// returns its degree after adding it with the given coefficient.
template <class Atom>
void parse_sum(StatementCursor& cur, int expected_degree, Atom&& atom)
{
    if (cur.peek() == '0') {
        std::size_t at = cur.pos();
        std::string w = cur.word();
        if (w == "0" && cur.at_end())
            return;
        cur.fail("expected a sum of terms", at);
    }
    bool first = true;
    while (!cur.at_end()) {
        Scalar c = 1;
        if (cur.accept('-'))
            c = -1;
        else if (!cur.accept('+') && !first)
            cur.fail("expected '+' or '-'");
        first = false;
        if (auto k = cur.coefficient())
            c *= *k;
        std::size_t at = cur.pos();
        int d = atom(c);
        if (d != expected_degree)
            cur.fail("term has degree " + std::to_string(d) + ", expected " + std::to_string(expected_degree), at);
    }
    if (first)
        cur.fail("missing right-hand side");
}

}  // namespace detail

using Ingested = std::variant<PresentedAlgebra, GradedLie>;

/// Axiom checks matching the declared kind, over the declared degree range.
inline std::vector<CheckResult> validate_presented(const PresentedAlgebra& A)
{
    using Kind = PresentedAlgebra::Kind;
    const int lo = A.min_degree(), hi = A.max_degree();
    std::vector<CheckResult> out{check_d_squared(A, lo, hi)};
    const Kind k = A.kind();
    if (k != Kind::Coalgebra) {
        out.push_back(check_associativity(A, lo, hi));
        out.push_back(check_leibniz(A, lo, hi));
    }
    if (k == Kind::Coalgebra || k == Kind::Bialgebra) {
        out.push_back(check_coassociativity(A, lo, hi));
        out.push_back(check_coderivation(A, lo, hi));
    }
    if (k == Kind::Bialgebra)
        out.push_back(check_hopf_compatibility(A, lo, hi));
    if (k == Kind::S2Algebra)
        out.push_back(check_identities_exhaustive(A, augmented_basis(A, lo, hi), 3, hi + 1));
    return out;
}

/// Parses a structure-constant or Lie document.  With `validate`, the first
/// failing axiom raises AxiomViolation naming the witness.
inline Ingested parse_document(std::string_view text, bool validate = true)
{
    using Kind = PresentedAlgebra::Kind;
    std::vector<std::pair<int, std::string>> lines;
    {
        std::istringstream in{std::string(text)};
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            if (auto h = line.find('#'); h != std::string::npos)
                line.erase(h);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                lines.emplace_back(n, line);
        }
    }
    if (lines.empty())
        throw SchemaError("line 1, column 1: empty document");

    std::size_t next = 0;
    auto header = [&](const char* key) {
        if (next >= lines.size())
            throw SchemaError(std::string("missing '") + key + "' statement");
        detail::StatementCursor cur(lines[next].second, lines[next].first);
        std::size_t at = cur.pos();
        if (cur.name() != key)
            cur.fail(std::string("expected '") + key + "'", at);
        at = cur.pos();
        std::string value = cur.word();
        if (!cur.at_end())
            cur.fail("unexpected text");
        ++next;
        return std::pair{value, std::pair{cur, at}};
    };

    auto [kind_text, kind_at] = header("kind");
    auto [ring_text, ring_at] = header("ring");
    Ring ring = Ring::integers();
    try {
        ring = Ring::parse(ring_text);
    }
    catch (const RingError& e) {
        ring_at.first.fail(e.what(), ring_at.second);
    }

    const bool lie = kind_text == "lie";
    Kind kind = Kind::Algebra;
    if (kind_text == "algebra")
        kind = Kind::Algebra;
    else if (kind_text == "coalgebra")
        kind = Kind::Coalgebra;
    else if (kind_text == "bialgebra")
        kind = Kind::Bialgebra;
    else if (kind_text == "s2-algebra")
        kind = Kind::S2Algebra;
    else if (!lie)
        kind_at.first.fail("unknown kind '" + kind_text + "'", kind_at.second);

    // basis statements come first so that later entries can be resolved
    PresentedAlgebra A(ring, kind);
    std::vector<std::string> lie_names;
    std::vector<int> lie_degrees;
    std::map<std::string, int> lie_index;
    while (next < lines.size()) {
        detail::StatementCursor cur(lines[next].second, lines[next].first);
        std::size_t at = cur.pos();
        if (cur.name() != "basis")
            break;
        (void)at;
        while (!cur.at_end()) {
            std::size_t nat = cur.pos();
            std::string name = cur.name();
            cur.expect(':');
            int deg = cur.integer();
            if (lie) {
                if (lie_index.count(name))
                    cur.fail("basis element '" + name + "' declared twice", nat);
                if (deg <= 0)
                    cur.fail("Lie basis degrees must be positive", nat);
                lie_index[name] = static_cast<int>(lie_names.size());
                lie_names.push_back(name);
                lie_degrees.push_back(deg);
            }
            else {
                try {
                    A.add_basis(name, deg);
                }
                catch (const SchemaError& e) {
                    cur.fail(e.what(), nat);
                }
            }
        }
        ++next;
    }

    auto lookup = [&](detail::StatementCursor& cur) -> int {
        std::size_t at = cur.pos();
        std::string name = cur.name();
        if (lie) {
            auto it = lie_index.find(name);
            if (it == lie_index.end())
                cur.fail("unknown basis element '" + name + "'", at);
            return it->second;
        }
        auto k = A.find(name);
        if (!k)
            cur.fail("unknown basis element '" + name + "'", at);
        return *k;
    };
    auto degree_of = [&](int k) { return lie ? lie_degrees[static_cast<std::size_t>(k)] : A.degree(k); };
    auto linear = [&](detail::StatementCursor& cur, int expected) {
        LinComb<int> v(ring);
        detail::parse_sum(cur, expected, [&](const Scalar& c) {
            int k = lookup(cur);
            v.add(k, c);
            return degree_of(k);
        });
        return v;
    };

    GradedLie L(ring, lie_names, lie_degrees);
    for (; next < lines.size(); ++next) {
        detail::StatementCursor cur(lines[next].second, lines[next].first);
        std::size_t at = cur.pos();
        std::string key = cur.name();
        if (key == "unit" && !lie) {
            int k = lookup(cur);
            if (A.degree(k) != 0)
                cur.fail("the unit must have degree 0", at);
            if (!cur.at_end())
                cur.fail("unexpected text");
            A.set_unit(k);
        }
        else if (key == "d") {
            int k = lookup(cur);
            cur.expect('=');
            auto v = linear(cur, degree_of(k) - 1);
            if (lie)
                L.set_differential(k, v);
            else
                A.set_differential(k, v);
        }
        else if (key == "product" && !lie) {
            int a = lookup(cur);
            cur.expect('*');
            int b = lookup(cur);
            cur.expect('=');
            if (A.is_unit(a) || A.is_unit(b))
                cur.fail("products with the unit are implied", at);
            A.set_product(a, b, linear(cur, A.degree(a) + A.degree(b)));
        }
        else if (key == "coproduct" && !lie) {
            int c = lookup(cur);
            cur.expect('=');
            PairComb<int> v(ring);
            detail::parse_sum(cur, A.degree(c), [&](const Scalar& e) {
                std::size_t pat = cur.pos();
                int l = lookup(cur);
                cur.expect('|');
                int r = lookup(cur);
                if (A.is_unit(l) || A.is_unit(r))
                    cur.fail("the reduced coproduct has no unit factors", pat);
                v.add({l, r}, e);
                return A.degree(l) + A.degree(r);
            });
            A.set_coproduct(c, v);
        }
        else if (key == "brace" && !lie) {
            int x = lookup(cur);
            cur.expect('{');
            std::vector<int> ys;
            int deg = A.degree(x);
            do {
                ys.push_back(lookup(cur));
                deg += A.degree(ys.back()) + 1;
            } while (cur.accept(','));
            cur.expect('}');
            cur.expect('=');
            A.set_brace(x, ys, linear(cur, deg));
        }
        else if (key == "bracket" && lie) {
            cur.expect('[');
            int i = lookup(cur);
            cur.expect(',');
            int j = lookup(cur);
            cur.expect(']');
            cur.expect('=');
            L.set_bracket(i, j, linear(cur, lie_degrees[static_cast<std::size_t>(i)] +
                                               lie_degrees[static_cast<std::size_t>(j)]));
        }
        else if (key == "basis")
            cur.fail("basis statements must precede structure constants", at);
        else
            cur.fail("unknown statement '" + key + "' for kind " + kind_text, at);
    }

    if (lie) {
        if (validate)
            L.require_valid();
        return L;
    }
    if (!A.has_unit() && kind != Kind::Coalgebra)
        throw SchemaError("line " + std::to_string(lines.back().first) + ", column 1: missing 'unit' statement");
    if (validate)
        for (const auto& r : validate_presented(A))
            if (!r.ok())
                throw AxiomViolation(r.id + " fails at " + r.failures.front());
    return A;
}

inline Ingested ingest(const std::string& path, bool validate = true)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str(), validate);
    }
    catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

}  // namespace s2cobar
