#include "podles/ncpoly.hpp"

#include <cctype>
#include <utility>

namespace podles {

bool gen_in_basis(Gen g, Basis b) {
    switch (g) {
        case Gen::A:
        case Gen::B:
        case Gen::C:
        case Gen::D:
            return b == Basis::SUQ2;
        case Gen::Z:
        case Gen::E:
        case Gen::Es:
            return b == Basis::PODLES;
    }
    return false;
}

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::A: return "a";
        case Gen::B: return "b";
        case Gen::C: return "c";
        case Gen::D: return "d";
        case Gen::Z: return "z";
        case Gen::E: return "e";
        case Gen::Es: return "es";
    }
    return "?";
}

std::vector<Gen> Word::letters(Basis b) const {
    static constexpr Gen su[4] = {Gen::A, Gen::B, Gen::C, Gen::D};
    static constexpr Gen po[3] = {Gen::E, Gen::Z, Gen::Es};
    std::vector<Gen> out;
    out.reserve(degree());
    const std::size_t slots = b == Basis::SUQ2 ? 4 : 3;
    for (std::size_t i = 0; i < slots; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k)
            out.push_back(b == Basis::SUQ2 ? su[i] : po[i]);
    return out;
}

namespace {

/* Adjacent reordering x y -> factor * (y x). */
struct SwapRule {
    Gen x, y;
    Rational factor;
};

/* Replacement branch appended after the commuted-through block. */
struct ElimBranch {
    Rational coeff;
    std::vector<Gen> word;
};

/*
 * L (M...) R -> pass_factor^{|M|} * (M...) * sum(branches), where every
 * letter of M lies in `pass`.
 */
struct ElimRule {
    Gen left, right;
    std::vector<Gen> pass;
    Rational pass_factor;
    std::vector<ElimBranch> branches;
};

struct RuleSet {
    std::vector<SwapRule> swaps;
    std::vector<ElimRule> elims;

    const SwapRule* find_swap(Gen x, Gen y) const {
        for (const auto& r : swaps)
            if (r.x == x && r.y == y)
                return &r;
        return nullptr;
    }
    const ElimRule* find_elim(Gen l, Gen r) const {
        for (const auto& e : elims)
            if (e.left == l && e.right == r)
                return &e;
        return nullptr;
    }
    bool passes(const ElimRule& e, Gen g) const {
        for (Gen p : e.pass)
            if (p == g)
                return true;
        return false;
    }
};

RuleSet make_rules(Basis b, const Params& P) {
    const Rational q = P.q, s = P.s;
    const Rational qi = Rational(1) / q;
    RuleSet rs;
    if (b == Basis::SUQ2) {
        rs.swaps = {
            {Gen::B, Gen::A, qi}, {Gen::C, Gen::A, qi}, {Gen::C, Gen::B, Rational(1)},
            {Gen::D, Gen::B, qi}, {Gen::D, Gen::C, qi},
        };
        rs.elims = {
            {Gen::A, Gen::D, {Gen::B, Gen::C}, q,
             {{Rational(1), {}}, {q, {Gen::B, Gen::C}}}},
            {Gen::D, Gen::A, {Gen::B, Gen::C}, qi,
             {{Rational(1), {}}, {qi, {Gen::B, Gen::C}}}},
        };
    } else {
        const Rational q2 = q * q, s2 = s * s;
        const Rational q2i = Rational(1) / q2;
        rs.swaps = {
            {Gen::Z, Gen::E, q2},
            {Gen::Es, Gen::Z, q2},
        };
        rs.elims = {
            {Gen::E, Gen::Es, {Gen::Z}, q2i,
             {{s2, {}}, {q2i * (1 - s2), {Gen::Z}}, {-q2i * q2i, {Gen::Z, Gen::Z}}}},
            {Gen::Es, Gen::E, {Gen::Z}, q2,
             {{s2, {}}, {1 - s2, {Gen::Z}}, {Rational(-1), {Gen::Z, Gen::Z}}}},
        };
    }
    return rs;
}

struct Redex {
    bool elim;
    std::size_t p, r; // swap: positions p, p+1; elim: left at p, right at r
};

std::vector<Redex> find_redexes(const std::vector<Gen>& w, const RuleSet& rs) {
    std::vector<Redex> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rs.find_swap(w[i], w[i + 1]))
            out.push_back({false, i, i + 1});
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (const auto& er : rs.elims) {
            if (w[p] != er.left)
                continue;
            std::size_t r = p + 1;
            while (r < w.size() && rs.passes(er, w[r]))
                ++r;
            if (r < w.size() && w[r] == er.right)
                out.push_back({true, p, r});
        }
    }
    return out;
}

struct WorkItem {
    Rational coeff;
    std::vector<Gen> word;
};

int slot_of(Gen g, Basis b) {
    if (b == Basis::SUQ2)
        return static_cast<int>(g); // A,B,C,D = 0..3
    switch (g) {
        case Gen::E: return 0;
        case Gen::Z: return 1;
        case Gen::Es: return 2;
        default: return -1;
    }
}

Word key_of_irreducible(const std::vector<Gen>& w, Basis b) {
    Word key;
    int last = -1;
    for (Gen g : w) {
        const int s = slot_of(g, b);
        if (s < last)
            throw Error("internal: irreducible word is not sorted");
        last = s;
        ++key.e[static_cast<std::size_t>(s)];
    }
    if (b == Basis::SUQ2 && key.e[0] > 0 && key.e[3] > 0)
        throw Error("internal: irreducible word mixes a and d");
    if (b == Basis::PODLES && key.e[0] > 0 && key.e[2] > 0)
        throw Error("internal: irreducible word mixes e and es");
    return key;
}

} // namespace

NcPoly nc_normalize(Basis b, const Params& P, const RawSum& raw, const RewriteStrategy& strategy) {
    const RuleSet rules = make_rules(b, P);
    NcPoly out(b, P);

    std::vector<WorkItem> stack;
    for (const auto& t : raw) {
        for (Gen g : t.word)
            if (!gen_in_basis(g, b))
                throw MalformedInputError(std::string("generator '") + gen_name(g) +
                                          "' does not belong to this basis");
        if (t.coeff != 0)
            stack.push_back({t.coeff, t.word});
    }

    std::size_t steps = 0;
    constexpr std::size_t kMaxSteps = 50'000'000;

    while (!stack.empty()) {
        WorkItem item = std::move(stack.back());
        stack.pop_back();

        for (;;) {
            if (++steps > kMaxSteps)
                throw ConvergenceError("rewriting step budget exhausted");
            const auto redexes = find_redexes(item.word, rules);
            if (redexes.empty()) {
                out.add_term(key_of_irreducible(item.word, b), item.coeff);
                break;
            }
            const std::size_t pick =
                strategy ? strategy(redexes.size()) % redexes.size() : 0;
            const Redex rd = redexes[pick];

            if (!rd.elim) {
                const SwapRule* sr = rules.find_swap(item.word[rd.p], item.word[rd.p + 1]);
                std::swap(item.word[rd.p], item.word[rd.p + 1]);
                item.coeff *= sr->factor;
                continue;
            }

            const ElimRule* er = rules.find_elim(item.word[rd.p], item.word[rd.r]);
            const std::size_t mid = rd.r - rd.p - 1;
            Rational base = item.coeff;
            for (std::size_t k = 0; k < mid; ++k)
                base *= er->pass_factor;

            std::vector<Gen> prefix(item.word.begin(),
                                    item.word.begin() + static_cast<std::ptrdiff_t>(rd.p));
            prefix.insert(prefix.end(),
                          item.word.begin() + static_cast<std::ptrdiff_t>(rd.p) + 1,
                          item.word.begin() + static_cast<std::ptrdiff_t>(rd.r));
            const std::vector<Gen> suffix(item.word.begin() + static_cast<std::ptrdiff_t>(rd.r) + 1,
                                          item.word.end());

            // continue in place with the first branch, stack the rest
            for (std::size_t bi = 1; bi < er->branches.size(); ++bi) {
                const auto& br = er->branches[bi];
                WorkItem w2;
                w2.coeff = base * br.coeff;
                w2.word = prefix;
                w2.word.insert(w2.word.end(), br.word.begin(), br.word.end());
                w2.word.insert(w2.word.end(), suffix.begin(), suffix.end());
                stack.push_back(std::move(w2));
            }
            const auto& br0 = er->branches.front();
            item.coeff = base * br0.coeff;
            item.word = std::move(prefix);
            item.word.insert(item.word.end(), br0.word.begin(), br0.word.end());
            item.word.insert(item.word.end(), suffix.begin(), suffix.end());
        }
    }
    return out;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

NcPoly NcPoly::scalar(Basis b, const Params& p, const Rational& c) {
    NcPoly out(b, p);
    out.add_term(Word{}, c);
    return out;
}

NcPoly NcPoly::generator(Basis b, const Params& p, Gen g) {
    if (!gen_in_basis(g, b))
        throw MalformedInputError(std::string("generator '") + gen_name(g) +
                                  "' does not belong to this basis");
    NcPoly out(b, p);
    Word w;
    ++w.e[static_cast<std::size_t>(slot_of(g, b))];
    out.add_term(w, Rational(1));
    return out;
}

std::uint32_t NcPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [w, c] : terms_)
        d = std::max(d, w.degree());
    return d;
}

namespace {
void require_compatible(const NcPoly& x, const NcPoly& y) {
    if (x.basis() != y.basis())
        throw IncompatibleOperandsError("operands use different bases");
    if (x.params() != y.params())
        throw IncompatibleOperandsError("operands use different parameter points");
}
} // namespace

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    require_compatible(*this, o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    require_compatible(*this, o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NcPoly operator*(const NcPoly& x, const NcPoly& y) {
    require_compatible(x, y);
    RawSum raw;
    raw.reserve(x.terms().size() * y.terms().size());
    for (const auto& [wx, cx] : x.terms()) {
        const auto lx = wx.letters(x.basis());
        for (const auto& [wy, cy] : y.terms()) {
            RawTerm t;
            t.coeff = cx * cy;
            t.word = lx;
            const auto ly = wy.letters(y.basis());
            t.word.insert(t.word.end(), ly.begin(), ly.end());
            raw.push_back(std::move(t));
        }
    }
    return nc_normalize(x.basis(), x.params(), raw);
}

NcPoly operator*(const Rational& c, NcPoly x) {
    if (c == 0)
        return NcPoly::zero(x.basis(), x.params());
    for (auto& [w, cf] : x.terms_)
        cf *= c;
    return x;
}

NcPoly NcPoly::star() const {
    const Rational q = params_.q;
    RawSum raw;
    for (const auto& [w, c] : terms_) {
        RawTerm t;
        t.coeff = c;
        const auto ls = w.letters(basis_);
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
            switch (*it) {
                case Gen::A: t.word.push_back(Gen::D); break;
                case Gen::D: t.word.push_back(Gen::A); break;
                case Gen::B:
                    t.coeff *= -q;
                    t.word.push_back(Gen::C);
                    break;
                case Gen::C:
                    t.coeff *= Rational(-1) / q;
                    t.word.push_back(Gen::B);
                    break;
                case Gen::Z: t.word.push_back(Gen::Z); break;
                case Gen::E: t.word.push_back(Gen::Es); break;
                case Gen::Es: t.word.push_back(Gen::E); break;
            }
        }
        raw.push_back(std::move(t));
    }
    return nc_normalize(basis_, params_, raw);
}

NcPoly NcPoly::pow(unsigned n) const {
    NcPoly acc = NcPoly::scalar(basis_, params_, Rational(1));
    for (unsigned i = 0; i < n; ++i)
        acc = acc * *this;
    return acc;
}

bool NcPoly::operator==(const NcPoly& o) const {
    require_compatible(*this, o);
    return terms_ == o.terms_;
}

std::string NcPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        out += "(" + format_rational(c) + ")";
        const std::size_t slots = basis_ == Basis::SUQ2 ? 4 : 3;
        static constexpr Gen su[4] = {Gen::A, Gen::B, Gen::C, Gen::D};
        static constexpr Gen po[3] = {Gen::E, Gen::Z, Gen::Es};
        for (std::size_t i = 0; i < slots; ++i) {
            if (w.e[i] == 0)
                continue;
            out += "*";
            out += gen_name(basis_ == Basis::SUQ2 ? su[i] : po[i]);
            if (w.e[i] > 1)
                out += "^" + std::to_string(w.e[i]);
        }
    }
    return out;
}

/* ---------------- expression front end ---------------- */

namespace {

struct Parser {
    Basis basis;
    const Params& P;
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw MalformedInputError(msg + " at offset " + std::to_string(i) + " in '" + s + "'");
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Integer number() {
        skip_ws();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i)
            fail("expected a number");
        Integer n(s.substr(i, j - i));
        i = j;
        return n;
    }

    Gen ident() {
        skip_ws();
        std::size_t j = i;
        while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j])))
            ++j;
        const std::string name = s.substr(i, j - i);
        i = j;
        if (basis == Basis::SUQ2) {
            if (name == "a") return Gen::A;
            if (name == "b") return Gen::B;
            if (name == "c") return Gen::C;
            if (name == "d") return Gen::D;
        } else {
            if (name == "z" || name == "zs") return Gen::Z;
            if (name == "e") return Gen::E;
            if (name == "es") return Gen::Es;
        }
        fail("unknown generator '" + name + "'");
    }

    NcPoly primary() {
        skip_ws();
        if (i >= s.size())
            fail("unexpected end of input");
        const char c = s[i];
        if (c == '(') {
            ++i;
            NcPoly e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = number();
            if (eat('/')) {
                Integer den = number();
                if (den == 0)
                    fail("zero denominator");
                return NcPoly::scalar(basis, P, Rational(num, den));
            }
            return NcPoly::scalar(basis, P, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return NcPoly::generator(basis, P, ident());
        fail("unexpected character");
    }

    NcPoly factor() {
        NcPoly base = primary();
        if (eat('^')) {
            Integer n = number();
            if (n < 0 || n > 64)
                fail("exponent out of range");
            return base.pow(static_cast<unsigned>(n));
        }
        return base;
    }

    NcPoly term() {
        NcPoly acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }

    NcPoly expr() {
        bool neg = false;
        if (peek() == '-') {
            ++i;
            neg = true;
        } else if (peek() == '+') {
            ++i;
        }
        NcPoly acc = term();
        if (neg)
            acc = Rational(-1) * acc;
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++i;
                acc += term();
            } else if (c == '-') {
                ++i;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace

NcPoly parse_poly(Basis b, const Params& p, const std::string& text) {
    Parser ps{b, p, text};
    NcPoly out = ps.expr();
    ps.skip_ws();
    if (ps.i != text.size())
        ps.fail("trailing input");
    return out;
}

} // namespace podles
