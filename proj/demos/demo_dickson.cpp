// Print the GL4(2) Dickson generators and check their fixed-space table.

#include <coho/invariants.hpp>
#include <coho/series.hpp>

#include <iostream>

int main() {
    using namespace coho;
    AlgebraSpec alg = ActionScan::make_poly_spec(4);

    std::cout << "Dickson generators for GL4(2):\n";
    for (const Element& e : dickson(4)) {
        int d = *homogeneous_degree(e);
        std::cout << "  degree " << d << " with " << e.terms.size() << " terms";
        if (d == 8) std::cout << "  (" << render(alg, e).substr(0, 40) << " + ...)";
        std::cout << "\n";
    }

    const int dmax = 20;
    MatrixGroup gl = closure(standard_gl_generators(4));
    DimTable fixed{"gl4-fixed", 0, invariant_dimensions(gl, dmax)};
    DimTable want = table_from_series("dickson4", named_series("dickson4"), dmax);
    std::cout << "\nfixed-space dimensions vs series, degrees 0.." << dmax << ":\n  ";
    for (int d = 0; d <= dmax; ++d) std::cout << fixed.at(d) << ' ';
    std::cout << "\n  " << (compare(fixed, want).empty() ? "matches" : "MISMATCH")
              << " 1/((1-t^8)(1-t^12)(1-t^14)(1-t^15))\n";
    return 0;
}
