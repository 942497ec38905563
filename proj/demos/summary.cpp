// Prints the main invariants of a degree-data file.
#include <detloci/detloci.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: detloci_summary DEGREES.json\n";
        return 1;
    }
    std::ifstream f(argv[1]);
    const std::string text{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    try {
        const auto d = detloci::degree_data_from_string(text);
        const auto r = detloci::dimension_report(d);
        if (r.empty) {
            std::cout << "W(b;a) is empty\n";
            return 0;
        }
        const auto h = detloci::hilbert_polynomial(d);
        const auto v = detloci::classify(d);
        std::cout << "t=" << d.t << " c=" << d.c << " n=" << d.n << " N=" << d.N() << "\n";
        std::cout << "dim W = " << r.dimW_viaK << " (lambda = " << r.lambdaC
                  << ", aut(B) = " << r.autB << ")\n";
        std::cout << "degree " << h.degreeOfScheme;
        if (h.genus) std::cout << ", genus " << *h.genus;
        std::cout << "\n";
        std::cout << "dimension: " << detloci::to_string(v.dimStatus) << " " << v.dimRule
                  << "; component: " << detloci::to_string(v.componentStatus) << " "
                  << v.componentRule << "\n";
    } catch (const detloci::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
