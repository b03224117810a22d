#include "linklab/parser.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

namespace linklab {

std::string order_name(MonomialOrder order) {
    switch (order) {
        case MonomialOrder::lex:
            return "lex";
        case MonomialOrder::glex:
            return "glex";
        case MonomialOrder::grevlex:
        default:
            return "grevlex";
    }
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex;
    if (name == "lex") return MonomialOrder::lex;
    if (name == "glex") return MonomialOrder::glex;
    throw Error("unknown monomial order '" + name + "'");
}

namespace {

struct Cursor {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    int col() const { return static_cast<int>(pos) + 1; }
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos;
    }
};

std::int64_t read_int(Cursor& c, const char* what) {
    int start = c.col();
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError(std::string("expected ") + what, c.line, start);
    std::int64_t v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        int d = c.peek() - '0';
        if (v > (INT64_MAX - d) / 10)
            throw ParseError("integer literal too large", c.line, start);
        v = v * 10 + d;
        ++c.pos;
    }
    return v;
}

Polynomial parse_generator(const RingDescriptor& ring, const std::string& src,
                           int line_no) {
    const Field& F = ring.field();
    Cursor c{src, line_no};
    std::vector<Term> terms;

    c.skip_ws();
    bool expect_term = true;
    int sign = 1;
    while (!c.done()) {
        if (c.peek() == '+' || c.peek() == '-') {
            sign = (c.peek() == '-') ? -sign : sign;
            ++c.pos;
            c.skip_ws();
            expect_term = true;
            continue;
        }
        // one term: optional integer coefficient, then factors
        int term_col = c.col();
        Coeff coeff = F.one();
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = F.from_int(read_int(c, "coefficient"));
            saw_anything = true;
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
            }
        }
        Monomial mono = Monomial::one(ring.num_vars());
        while (!c.done() && c.peek() == 'x') {
            ++c.pos;
            int var_col = c.col();
            if (c.done() ||
                !std::isdigit(static_cast<unsigned char>(c.peek())))
                throw ParseError("expected variable index after 'x'",
                                 line_no, var_col);
            std::int64_t idx = read_int(c, "variable index");
            if (idx >= static_cast<std::int64_t>(ring.num_vars()))
                throw ParseError("unknown variable x" + std::to_string(idx) +
                                     " in a ring with n=" +
                                     std::to_string(ring.num_vars()),
                                 line_no, var_col - 1);
            std::int64_t exp = 1;
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.pos;
                c.skip_ws();
                int exp_col = c.col();
                exp = read_int(c, "exponent after '^'");
                if (exp > INT32_MAX)
                    throw ParseError("malformed exponent", line_no, exp_col);
            }
            mono.exponent(static_cast<std::size_t>(idx)) +=
                static_cast<std::int32_t>(exp);
            saw_anything = true;
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
            }
        }
        if (!saw_anything)
            throw ParseError("unexpected character '" +
                                 std::string(1, c.peek()) + "'",
                             line_no, term_col);
        if (sign < 0) coeff = F.neg(coeff);
        terms.push_back({coeff, std::move(mono)});
        sign = 1;
        expect_term = false;
        c.skip_ws();
    }
    if (expect_term && !terms.empty())
        throw ParseError("dangling sign at end of generator", line_no,
                         c.col());
    return Polynomial::make(ring, std::move(terms));
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

RingDescriptor parse_ring_line(const std::string& raw, int line_no) {
    std::istringstream in(raw);
    std::string head, ntok, ctok, otok;
    in >> head >> ntok >> ctok >> otok;
    auto need = [&](const std::string& tok, const std::string& prefix) {
        if (tok.rfind(prefix, 0) != 0)
            throw ParseError("ring line must read 'ring n=<int> char=<0|p> "
                             "order=<grevlex|lex|glex>'",
                             line_no, 1);
        return tok.substr(prefix.size());
    };
    if (head != "ring")
        throw ParseError("first line must start with 'ring'", line_no, 1);
    std::size_t n;
    std::uint64_t p;
    try {
        n = std::stoull(need(ntok, "n="));
        p = std::stoull(need(ctok, "char="));
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("malformed ring line numbers", line_no, 1);
    }
    MonomialOrder ord;
    try {
        ord = order_from_name(need(otok, "order="));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
    }
    Field f = (p == 0) ? Field::rationals() : Field::prime_field(p);
    if (n < 1) throw ParseError("ring needs n >= 1", line_no, 1);
    return RingDescriptor(n, f, ord);
}

}  // namespace

Ideal parse_ideal_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::optional<RingDescriptor> ring;
    std::vector<Polynomial> gens;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string body = strip_comment(raw);
        if (blank(body)) continue;
        if (!ring) {
            ring = parse_ring_line(body, line_no);
        } else {
            gens.push_back(parse_generator(*ring, body, line_no));
        }
    }
    if (!ring) throw ParseError("empty file: missing ring line", 1, 1);
    return Ideal(*ring, std::move(gens));
}

Ideal parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ideal file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ideal_text(ss.str());
}

std::string format_ideal_file(const Ideal& I) {
    const RingDescriptor& r = I.ring();
    std::string out = "ring n=" + std::to_string(r.num_vars()) +
                      " char=" + std::to_string(r.field().characteristic()) +
                      " order=" + order_name(r.order()) + "\n";
    for (const Polynomial& g : I.generators()) out += g.to_string() + "\n";
    return out;
}

}  // namespace linklab
