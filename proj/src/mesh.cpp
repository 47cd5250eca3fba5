#include "arx/mesh.hpp"

#include <ostream>
#include <sstream>

#include "arx/numfmt.hpp"

namespace arx {

void Mesh::write(std::ostream& out) const {
    for (const auto& v : vertices)
        out << "v " << g9(v[0]) << ' ' << g9(v[1]) << ' ' << g9(v[2]) << '\n';
    for (const auto& f : faces) {
        out << "f " << f[0] << ' ' << f[1] << ' ' << f[2];
        if (f[3] != 0) out << ' ' << f[3];
        out << '\n';
    }
}

std::string Mesh::to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

}  // namespace arx
