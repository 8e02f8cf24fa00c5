#pragma once

#include <stdexcept>

namespace hb {

// A grid is not commensurate with the group elements applied to it, or a
// boundary point was hit where a sign factor is undefined.
struct grid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was asked of a subgroup of the wrong class (for example a
// witness function for a subgroup that is not of class E1).
struct class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size guard was exceeded.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hb
