// Expand the registered series and show the structure-theorem combinations.

#include <coho/series.hpp>

#include <iomanip>
#include <iostream>

int main() {
    using namespace coho;
    const int dmax = 24;

    std::cout << "named series, coefficients 0.." << dmax << ":\n";
    for (const std::string name :
         {"dickson4", "a6-invariants", "a7-invariants", "psu-radical", "mcl-radical"}) {
        std::cout << "  " << std::setw(14) << name << ":";
        for (long long c : expand(named_series(name), dmax)) std::cout << ' ' << c;
        std::cout << "\n";
    }

    std::cout << "\nstructure theorems:\n";
    for (const std::string name : {"psu-total", "psu-expansion", "mcl-total", "n-total"}) {
        DimTable t = combine(named_theorem(name), dmax);
        std::cout << "  " << std::setw(14) << name << ":";
        for (long long c : t.dims) std::cout << ' ' << c;
        std::cout << "\n";
    }

    bool closed = series_equal(to_series(named_theorem("mcl-total")),
                               to_series(named_theorem("mcl-closed")));
    std::cout << "\nmcl-total equals the mcl-closed form: " << (closed ? "yes" : "NO") << "\n";
    return 0;
}
