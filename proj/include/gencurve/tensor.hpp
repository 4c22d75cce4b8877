#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "gencurve/common.hpp"

namespace gencurve {

// Dense row-major float32 tensor; the unit of all file IO.
struct Tensor {
    std::vector<std::uint32_t> dims;
    Vec data;

    Tensor() = default;
    Tensor(std::vector<std::uint32_t> d, Vec values) : dims(std::move(d)), data(std::move(values)) {}

    static Tensor zeros(std::vector<std::uint32_t> d) {
        std::size_t n = 1;
        for (auto x : d) n *= x;
        return Tensor(std::move(d), Vec(n, 0.0f));
    }

    std::size_t size() const { return data.size(); }

    bool operator==(const Tensor& o) const { return dims == o.dims && data == o.data; }
};

}  // namespace gencurve
