// Builds an unparalleled CS(v, 2t), checks it, prints it.
//   sample_build [v] [t]
#include <cstdlib>
#include <iostream>

#include "evenweave/evenweave.hpp"

int main(int argc, char** argv)
{
    using namespace evenweave;
    const int v = argc > 1 ? std::atoi(argv[1]) : 24;
    const int t = argc > 2 ? std::atoi(argv[2]) : 3;

    BuildResult built;
    try {
        built = build_unparalleled(v, t);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const auto dec = check_decomposition(built.system.system);
    std::cout << built.system.provenance.tag() << ": " << built.system.system.cycles.size() << " cycles, decomposition "
              << (dec.passed ? "ok" : "BROKEN") << "\n";

    const auto rep = check_certificate(built.certificate, built.system);
    for (const auto& line : rep.tree)
        std::cout << line << "\n";

    if (v <= 24) {
        const auto hunt = find_parallel_class(built.system.system);
        std::cout << "parallel class search: " << to_string(hunt.status) << "\n";
    }
    std::cout << render_text(to_document(built.system));
    return dec.passed && rep.passed ? 0 : 1;
}
