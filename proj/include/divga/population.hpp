#pragma once

#include <vector>

#include "divga/bitstring.hpp"

namespace divga {

struct Individual {
    BitString genes;
    double fitness;
};

using Population = std::vector<Individual>;

} // namespace divga
