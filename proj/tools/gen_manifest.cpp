// Emits manifests for products of Weierstrass curves, including the
// translation-by-2-torsion polynomial maps needed by the Igusa quotient
// (characteristic 2). Curves are given in the form
//   E1: y^2 + x y = x^3 + a2 x^2 + a6      (ordinary, T = (0, sqrt(a6)))
//   E2: y^2 + b1 x y + b3 y = x^3 + b2 x^2 + b4 x + b6
// with coefficients as expressions in g for extension fields.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wz/errors.hpp"
#include "wz/manifest.hpp"

using namespace wz;

namespace {

FqElem eval_const(const std::string& expr, const FqField& f) {
    IntMPoly e = parse_poly(expr, {}, f);
    return mpoly_eval(e, {}, f);
}

// element -> expression in g
std::string elem_expr(const FqElem& e) {
    std::string out;
    for (uint32_t i = 0; i < e.coords.size(); ++i) {
        if (!e.coords[i]) continue;
        std::string mono = i == 0   ? std::to_string(e.coords[i])
                           : i == 1 ? (e.coords[i] == 1 ? "g"
                                                        : std::to_string(e.coords[i]) + "*g")
                                    : (e.coords[i] == 1
                                           ? "g^" + std::to_string(i)
                                           : std::to_string(e.coords[i]) + "*g^" +
                                                 std::to_string(i));
        out += out.empty() ? mono : " + " + mono;
    }
    return out.empty() ? "0" : out;
}

struct Term {
    std::string mono;
    FqElem coeff;
};

std::string poly_line(const std::vector<Term>& terms) {
    std::string out;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        std::string c = elem_expr(t.coeff);
        std::string piece = c == "1" ? t.mono : "(" + c + ")*" + t.mono;
        out += out.empty() ? piece : " + " + piece;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"emit a product-of-curves manifest with 2-torsion translation maps"};
    uint32_t p = 2, a = 1;
    std::string a2 = "0", a6 = "1";
    std::string b1 = "1", b2 = "0", b3 = "0", b4 = "0", b6 = "1";
    std::string out_path;
    app.add_option("--p", p, "characteristic (2 for the Igusa family)");
    app.add_option("--a", a, "extension degree of the base field");
    app.add_option("--a2", a2, "E1 coefficient a2");
    app.add_option("--a6", a6, "E1 coefficient a6 (nonzero)");
    app.add_option("--b1", b1, "E2 coefficient b1");
    app.add_option("--b2", b2, "E2 coefficient b2");
    app.add_option("--b3", b3, "E2 coefficient b3");
    app.add_option("--b4", b4, "E2 coefficient b4");
    app.add_option("--b6", b6, "E2 coefficient b6");
    app.add_option("--out", out_path, "output path (default stdout)");
    CLI11_PARSE(app, argc, argv);

    try {
        if (p != 2)
            throw HypothesisViolated(
                "translation maps are emitted for p = 2 only (the Igusa "
                "construction); other characteristics need manifest-authored "
                "maps");
        FqField F = FqField::make(p, a);
        FqElem A2 = eval_const(a2, F), A6 = eval_const(a6, F);
        if (A6.is_zero()) throw HypothesisViolated("a6 must be nonzero");
        // sqrt in characteristic 2: x -> x^{2^{a-1}}
        FqElem T = A6;
        for (uint32_t i = 0; i + 1 < a; ++i) T = F.mul(T, T);
        {
            FqElem chk = F.mul(T, T);
            if (!(chk == A6)) throw Error("square root failed");
        }
        FqElem B1 = eval_const(b1, F), B2 = eval_const(b2, F),
               B3 = eval_const(b3, F), B4 = eval_const(b4, F),
               B6 = eval_const(b6, F);
        FqElem one = F.one();
        FqElem A2p1 = F.add(A2, one);
        FqElem A2pT = F.add(A2, T);
        FqElem T2 = F.mul(T, T);

        std::ostringstream out;
        out << "# generated by gen_manifest: E1 x E2 over F_" << F.q().to_string()
            << " with the order-2 action (x, y) -> (x + T, -y)\n";
        out << "[field]\np = " << p << "\na = " << a << "\n\n";
        out << "[variety e1]\nkind = projective\nvars = x,y,z\n";
        out << "eq = "
            << poly_line({{"y^2*z", one},
                          {"x*y*z", one},
                          {"x^3", one},
                          {"x^2*z", A2},
                          {"z^3", A6}})
            << "\n\n";
        out << "[variety e2]\nkind = projective\nvars = x,y,z\n";
        out << "eq = "
            << poly_line({{"y^2*z", one},
                          {"x*y*z", B1},
                          {"y*z^2", B3},
                          {"x^3", one},
                          {"x^2*z", B2},
                          {"x*z^2", B4},
                          {"z^3", B6}})
            << "\n\n";
        out << "[variety prod]\nkind = product\nfactors = e1,e2\n\n";

        // translation by T = (0, sqrt(a6)) on E1: three representatives
        // covering the whole curve (the generic one, one fitting O, one
        // fitting T)
        out << "[action igusa]\non = prod\norder = 2\ndeclared_free = true\n";
        out << "map_0 = " << poly_line({{"x*z", T}}) << ", "
            << poly_line({{"x^2", T}, {"x*z", T}, {"y*z", T}, {"z^2", T2}})
            << ", " << poly_line({{"x^2", one}}) << "\n";
        out << "map_0 = " << poly_line({{"x^2", T}}) << ", "
            << poly_line({{"x^2", F.mul(T, A2p1)},
                          {"y^2", T},
                          {"x*z", T2},
                          {"z^2", F.mul(T, A6)}})
            << ", "
            << poly_line({{"y^2", one}, {"x*y", one}, {"x^2", A2}, {"z^2", A6}})
            << "\n";
        out << "map_0 = " << poly_line({{"y*z", T}, {"z^2", T2}}) << ", "
            << poly_line({{"x^2", T},
                          {"x*y", T},
                          {"x*z", F.mul(T, A2pT)},
                          {"z^2", T2}})
            << ", " << poly_line({{"x*y", one}, {"x*z", T}}) << "\n";
        // negation on E2: (x, y) -> (x, y + b1 x + b3)
        out << "map_1 = x, " << poly_line({{"y", one}, {"x", B1}, {"z", B3}})
            << ", z\n\n";
        out << "[declare]\nigusa = prod,igusa\nigusa_torsion_slot = 0\n";
        out << "main = prod\n";

        if (out_path.empty()) {
            std::fputs(out.str().c_str(), stdout);
        } else {
            std::ofstream f(out_path, std::ios::binary);
            f << out.str();
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
