// Builds a few graphs with boundary and prints λ1 next to its bounds.

#include <iostream>

#include "dirichlet/dirichlet.hpp"

int main() {
    using namespace dirichlet;

    // A 5-vertex path with both ends on the boundary: λ1 = 2 − √2.
    auto path = gen_path(5);
    std::cout << "path P5: lambda1 = " << fmt12(lambda1(path).lambda1) << "\n";

    // Hand-built graph: triangle 0-1-2 with boundary vertices 3 and 4.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {2, 4}, {1, 4}};
    auto bg = build_boundary_graph(5, edges, {3, 4});
    auto report = verify_all(bg);
    std::cout << "triangle with two boundary vertices: lambda1 = " << fmt12(report.lambda1) << "\n";
    for (const auto& b : report.bounds) {
        std::cout << "  " << b.name << " (" << to_string(b.kind) << ") " << fmt12(b.value)
                  << (b.holds ? "" : "  VIOLATED") << "\n";
    }

    // The extremal tree with 3 interior vertices and 4 leaves.
    auto search = max_lambda1(3, 4);
    std::cout << "k=3, b=4: " << search.total_enumerated << " classes, max lambda1 "
              << fmt12(search.max_lambda1) << ", sigma1 " << fmt12(sigma1(1, 3, 1)) << "\n";
    return 0;
}
