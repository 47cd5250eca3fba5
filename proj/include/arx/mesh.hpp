#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arx {

// Plain-text polygon mesh: "v x y z" lines followed by "f i j k" or
// "f i j k l" lines, 1-based indices.
struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    // quads carry four indices; triangles mark the unused slot with 0
    std::vector<std::array<std::uint32_t, 4>> faces;

    void add_quad(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) {
        faces.push_back({i, j, k, l});
    }
    void add_triangle(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
        faces.push_back({i, j, k, 0});
    }

    void write(std::ostream& out) const;
    std::string to_string() const;
};

}  // namespace arx
