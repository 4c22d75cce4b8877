#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "gencurve/tensor.hpp"

namespace gencurve {

// GCT1 tensor record: magic "GCT1", dtype u8 (0 = f32 LE), ndim u8,
// ndim x u32 LE dims, row-major payload. Round trips byte-identically.
std::vector<std::uint8_t> encode_tensor(const Tensor& t);
Tensor decode_tensor(const std::uint8_t* bytes, std::size_t n, std::size_t base_offset = 0);

void write_tensor(const std::filesystem::path& path, const Tensor& t);
Tensor read_tensor(const std::filesystem::path& path);

// Binary PGM (P5, maxval 255); values map linearly from [-1,1] to [0,255].
void write_pgm(const std::filesystem::path& path, const Vec& image, int width, int height);
// Returns image in [-1,1] plus (width, height).
std::pair<Vec, std::pair<int, int>> read_pgm(const std::filesystem::path& path);

// Checkpoint container: magic "GCKP", u32 LE entry count, then per entry
// u16 LE name length, UTF-8 name, embedded GCT1 record.
struct NamedTensor {
    std::string name;
    Tensor tensor;
};
void write_checkpoint(const std::filesystem::path& path, const std::vector<NamedTensor>& entries);
std::vector<NamedTensor> read_checkpoint(const std::filesystem::path& path);

// All writers go through a temp file + rename so partial outputs never land.
void atomic_write_bytes(const std::filesystem::path& path, const void* data, std::size_t n);
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace gencurve
