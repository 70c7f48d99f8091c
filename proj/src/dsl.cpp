#include "fgc/dsl.hpp"

#include <cctype>

#include "fgc/minpoly.hpp"

namespace fgc {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// head(args...) -> {head, args}; plain identifiers come back with empty args
struct Call {
    std::string head;
    std::vector<std::string> args;
    bool has_parens = false;
};

Call split_call(const std::string& text, std::size_t base_pos) {
    std::string s = strip(text);
    auto open = s.find('(');
    Call c;
    if (open == std::string::npos) {
        c.head = s;
        return c;
    }
    c.head = strip(s.substr(0, open));
    c.has_parens = true;
    if (s.empty() || s.back() != ')')
        throw ParseError("expected ')'", base_pos + s.size());
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    int depth = 0;
    std::string cur;
    for (char ch : inner) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            c.args.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", base_pos + open);
    c.args.push_back(strip(cur));
    return c;
}

int small_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + s + "'", 0);
    }
}

RingDescriptor parse_ring(const std::string& text) {
    Call c = split_call(text, 0);
    if (c.head == "zinv" && c.args.size() == 1) return LocalizationOfZ{Int(c.args[0])};
    if (c.head == "quadorder" && c.args.size() == 1) return QuadraticOrder{Int(c.args[0])};
    if (c.head == "rationals" && !c.has_parens) return FullRationals{};
    if (c.head == "integers" && !c.has_parens) return Integers{};
    throw ParseError("unknown ring descriptor '" + text + "'", 0);
}

AlgebraPtr parse_algebra_inner(const std::string& text) {
    Call c = split_call(text, 0);
    if (!c.has_parens)
        throw ParseError("unknown algebra '" + text + "'", 0);

    if (c.head == "rotation" && c.args.size() == 1)
        return make_algebra({IrrationalRotation{classify(c.args[0])}});
    if (c.head == "uhf" && c.args.size() == 1)
        return make_algebra({UHF{parse_supernatural(c.args[0])}});
    if (c.head == "freegroup" && c.args.size() == 1)
        return make_algebra({ReducedFreeGroup{small_int(c.args[0], "freegroup rank")}});
    if (c.head == "freeprod" && c.args.size() == 2)
        return make_algebra({FreeProduct{small_int(c.args[0], "freeprod order"),
                                         small_int(c.args[1], "freeprod order")}});
    if (c.head == "af" && c.args.size() == 1)
        return make_algebra({AF{parse_ring(c.args[0])}});
    if (c.head == "tensor_fg" && c.args.size() == 2)
        return make_algebra({TensorWithFreeGroup{parse_algebra_inner(c.args[0]),
                                                 small_int(c.args[1], "free-group rank")}});
    if (c.head == "tensor" && c.args.size() == 2)
        return make_algebra({TensorMin{parse_algebra_inner(c.args[0]),
                                       parse_algebra_inner(c.args[1])}});
    throw ParseError("unknown algebra constructor '" + c.head + "'", 0);
}

} // namespace

SupernaturalNumber parse_supernatural(const std::string& text) {
    std::vector<SupernaturalNumber::Factor> fs;
    std::string s = strip(text);
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto star = s.find('*', pos);
        std::string piece = strip(s.substr(pos, star == std::string::npos ? star : star - pos));
        auto hat = piece.find('^');
        if (hat == std::string::npos)
            throw ParseError("supernatural factor needs the form p^e or p^inf, got '" + piece + "'",
                             pos);
        std::string p = strip(piece.substr(0, hat));
        std::string e = strip(piece.substr(hat + 1));
        SupernaturalNumber::Factor f;
        try {
            f.prime = Int(p);
        } catch (const std::exception&) {
            throw ParseError("bad prime '" + p + "'", pos);
        }
        if (e == "inf") f.exponent = std::nullopt;
        else {
            try {
                f.exponent = Int(e);
            } catch (const std::exception&) {
                throw ParseError("bad exponent '" + e + "'", pos);
            }
        }
        fs.push_back(std::move(f));
        pos = star == std::string::npos ? s.size() : star + 1;
    }
    if (fs.empty()) throw ParseError("empty supernatural number", 0);
    try {
        return SupernaturalNumber::make(std::move(fs));
    } catch (const Error& err) {
        throw ParseError(err.what(), 0);
    }
}

AlgebraPtr parse_algebra(const std::string& text) { return parse_algebra_inner(strip(text)); }

TraceGroup parse_trace_group(const std::string& text) {
    Call c = split_call(text, 0);
    if (c.head == "zlattice" && c.args.size() == 1) {
        QuadExt theta = parse_expr(c.args[0]);
        if (theta.is_rational())
            throw ParseError("zlattice parameter must be irrational", 0);
        return QuadraticLattice{minimal_polynomial(theta)};
    }
    if (c.head == "rlattice" && c.args.size() == 1) return make_rational_lattice(Int(c.args[0]));
    if (c.head == "sn" && c.args.size() == 1)
        return SupernaturalModule{parse_supernatural(c.args[0])};
    if (c.head == "ring" && c.args.size() == 1) return RingByDescriptor{parse_ring(c.args[0])};
    throw ParseError("unknown trace group '" + text + "'", 0);
}

} // namespace fgc
