#include "symfb/symop.hpp"

#include <cctype>
#include <cstdlib>

namespace symfb {

namespace {

int det2(const Mat3i& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

int det3(const Mat3i& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Inverse of a unimodular integer matrix via the adjugate (det = +-1).
Mat3i unimodular_inverse(int dim, const Mat3i& m, int det) {
    Mat3i inv{};
    if (dim == 2) {
        inv[0][0] = m[1][1] * det;
        inv[0][1] = -m[0][1] * det;
        inv[1][0] = -m[1][0] * det;
        inv[1][1] = m[0][0] * det;
    } else {
        inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * det;
        inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * det;
        inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * det;
        inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * det;
        inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * det;
        inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * det;
        inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * det;
        inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * det;
        inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * det;
    }
    return inv;
}

} // namespace

SymOp::SymOp(int dim, const Mat3i& linear, const Tra3& translation)
    : dim_(dim), linear_(linear) {
    if (dim != 2 && dim != 3) throw Error("SymOp: dimension must be 2 or 3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((i >= dim || j >= dim) && linear[i][j] != 0)
                throw Error("SymOp: matrix entries outside dimension must be zero");
    int det = dim == 2 ? det2(linear) : det3(linear);
    if (det != 1 && det != -1) throw Error("SymOp: matrix is not unimodular");
    inverse_linear_ = unimodular_inverse(dim, linear, det);
    for (int i = 0; i < dim; ++i) translation_[i] = translation[i].mod1();
    for (int i = 0; i < dim; ++i) {
        Rational s = 0;
        for (int j = 0; j < dim; ++j) s = s + inverse_linear_[i][j] * translation_[j];
        inv_translation_[i] = s;
    }
}

SymOp SymOp::identity(int dim) {
    Mat3i m{};
    for (int i = 0; i < dim; ++i) m[i][i] = 1;
    return SymOp(dim, m, {});
}

bool SymOp::is_identity() const {
    return has_identity_linear() && translation_[0].is_zero() &&
           translation_[1].is_zero() && translation_[2].is_zero();
}

bool SymOp::has_identity_linear() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (linear_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

bool operator<(const SymOp& a, const SymOp& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a.linear_[i][j] != b.linear_[i][j])
                return a.linear_[i][j] < b.linear_[i][j];
    for (int i = 0; i < 3; ++i)
        if (!(a.translation_[i] == b.translation_[i]))
            return a.translation_[i] < b.translation_[i];
    return false;
}

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

std::int64_t scan_int(Scanner& s) {
    std::size_t start = s.pos;
    std::int64_t v = 0;
    while (!s.done() && std::isdigit(static_cast<unsigned char>(s.peek()))) {
        v = v * 10 + (s.peek() - '0');
        if (v > 1'000'000'000) throw ParseError("integer too large", start);
        ++s.pos;
    }
    if (s.pos == start) throw ParseError("expected digit", s.pos);
    return v;
}

} // namespace

SymOp parse_symop(const std::string& text, int dim) {
    if (dim != 2 && dim != 3) throw Error("parse_symop: dimension must be 2 or 3");
    Mat3i linear{};
    Tra3 translation{};
    Scanner s{text};
    for (int coord = 0; coord < dim; ++coord) {
        if (coord > 0) {
            s.skip_ws();
            if (s.done() || s.peek() != ',')
                throw ParseError("expected ','", s.pos);
            ++s.pos;
        }
        bool any_term = false;
        while (true) {
            s.skip_ws();
            if (s.done() || s.peek() == ',') break;
            int sign = 1;
            if (s.peek() == '+' || s.peek() == '-') {
                if (!any_term && s.peek() == '+')
                    throw ParseError("unexpected '+'", s.pos);
                sign = s.peek() == '-' ? -1 : 1;
                ++s.pos;
                s.skip_ws();
                if (s.done()) throw ParseError("dangling sign", s.pos);
            } else if (any_term) {
                throw ParseError("expected '+' or '-' between terms", s.pos);
            }
            char c = s.peek();
            if (c == 'x' || c == 'y' || c == 'z') {
                int axis = c - 'x';
                if (axis >= dim)
                    throw ParseError("axis symbol outside dimension", s.pos);
                ++s.pos;
                linear[coord][axis] += sign;
                if (linear[coord][axis] > 1 || linear[coord][axis] < -1)
                    throw Error("parse_symop: axis coefficient magnitude exceeds 1");
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::int64_t num = scan_int(s);
                std::int64_t den = 1;
                s.skip_ws();
                if (!s.done() && s.peek() == '/') {
                    ++s.pos;
                    s.skip_ws();
                    den = scan_int(s);
                    if (den == 0) throw ParseError("zero denominator", s.pos);
                }
                translation[coord] = translation[coord] + Rational(sign * num, den);
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", s.pos);
            }
            any_term = true;
        }
        if (!any_term) throw ParseError("empty coordinate expression", s.pos);
    }
    s.skip_ws();
    if (!s.done()) throw ParseError("trailing input after last coordinate", s.pos);
    return SymOp(dim, linear, translation);
}

std::string format_symop(const SymOp& op) {
    static const char axes[] = "xyz";
    std::string out;
    for (int i = 0; i < op.dim(); ++i) {
        if (i > 0) out += ',';
        std::string coord;
        for (int j = 0; j < op.dim(); ++j) {
            int c = op.linear()[i][j];
            if (c == 0) continue;
            if (c < 0)
                coord += '-';
            else if (!coord.empty())
                coord += '+';
            coord += axes[j];
        }
        const Rational& t = op.translation()[i];
        if (!t.is_zero()) {
            if (!coord.empty()) coord += '+';
            coord += t.str();
        }
        if (coord.empty()) coord = "0";
        out += coord;
    }
    return out;
}

SymOp compose(const SymOp& a, const SymOp& b) {
    if (a.dim() != b.dim()) throw Error("compose: dimension mismatch");
    int dim = a.dim();
    Mat3i m{};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            int s = 0;
            for (int k = 0; k < dim; ++k) s += a.linear()[i][k] * b.linear()[k][j];
            m[i][j] = s;
        }
    Tra3 t{};
    for (int i = 0; i < dim; ++i) {
        Rational s = a.translation()[i];
        for (int j = 0; j < dim; ++j)
            s = s + a.linear()[i][j] * b.translation()[j];
        t[i] = s;
    }
    return SymOp(dim, m, t);
}

SymOp inverse(const SymOp& a) {
    int dim = a.dim();
    Tra3 t{};
    for (int i = 0; i < dim; ++i) {
        Rational s = 0;
        for (int j = 0; j < dim; ++j)
            s = s + a.inverse_linear()[i][j] * a.translation()[j];
        t[i] = -s;
    }
    return SymOp(dim, a.inverse_linear(), t);
}

Vec3d act_on_point(const SymOp& a, const Vec3d& x) {
    Vec3d y{};
    for (int i = 0; i < a.dim(); ++i) {
        double s = a.translation()[i].to_double();
        for (int j = 0; j < a.dim(); ++j) s += a.linear()[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

std::pair<Freq, Rational> act_on_frequency(const SymOp& a, const Freq& omega) {
    Freq target{};
    // A^{-T} omega, i.e. target_i = sum_j (A^{-1})_{ji} omega_j
    for (int i = 0; i < a.dim_; ++i) {
        int s = 0;
        for (int j = 0; j < a.dim_; ++j) s += a.inverse_linear_[j][i] * omega[j];
        target[i] = s;
    }
    Rational r = 0;
    for (int i = 0; i < a.dim_; ++i) r = r + omega[i] * a.inv_translation_[i];
    return {target, r.mod1()};
}

} // namespace symfb
