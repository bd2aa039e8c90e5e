// Copyright 2026 The colex-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A short walk through the library: build a lattice, cut it, read off entropies.

#include <cstdio>

#include "colex/colex_all.hpp"

int main() {
    using namespace colex;

    auto model = build_model(build_torus_colex(2));
    const Colex& lattice = *model.colex;
    std::printf("torus k=2: %zu qubits, %zu plaquettes, %zu encoded qubits\n", lattice.vertices, lattice.faces.size(), ground_degeneracy(model));

    for (const char* region : {"single_spin", "colored_chain(red,1,0)", "spin_ladder", "hex_disk(1)"}) {
        auto rep = entanglement_entropy(model, named_region(lattice, region));
        std::printf("  S(%s) = %g  (|A| = %zu, boundary %zu)\n", region, rep.s_a, rep.a_size, rep.boundary_size);
    }

    // Superposing two logical labels adds a binary entropy term on the chain.
    auto small = build_model(build_torus_colex(1));
    auto chain = named_region(*small.colex, "colored_chain(red,1,0)");
    auto state = LogicalState::pair(4, 0, 4, 0.25);
    std::printf("k=1 chain, sqrt(.25)|0> + sqrt(.75)|X3>: %.6f (dense check %.6f)\n", logical_superposition_entropy(small, state, chain).s_a,
                oracle_entropy(small, state, chain).s_a);

    auto big = build_model(build_torus_colex(4));
    auto tee = topological_entropy(big, tee_regions(*big.colex, 2, 1, 1));
    std::printf("k=4 annulus: S1..S4 = %g %g %g %g, s_topo = %g, D = %g\n", tee.s[0], tee.s[1], tee.s[2], tee.s[3], tee.s_topo, tee.quantum_dimension);
}
