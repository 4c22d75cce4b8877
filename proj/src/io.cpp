#include "gencurve/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace gencurve {

namespace {

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v & 0xff));
    out.push_back(std::uint8_t((v >> 8) & 0xff));
    out.push_back(std::uint8_t((v >> 16) & 0xff));
    out.push_back(std::uint8_t((v >> 24) & 0xff));
}

std::uint32_t get_u32le(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
           (std::uint32_t(p[3]) << 24);
}

}  // namespace

std::vector<std::uint8_t> encode_tensor(const Tensor& t) {
    if (t.dims.size() > 255) throw FormatError("tensor rank exceeds u8", 5);
    std::size_t n = 1;
    for (auto d : t.dims) n *= d;
    if (n != t.data.size()) throw UsageError("tensor dims do not match payload size");
    std::vector<std::uint8_t> out;
    out.reserve(6 + 4 * t.dims.size() + 4 * n);
    out.insert(out.end(), {'G', 'C', 'T', '1'});
    out.push_back(0);  // dtype 0 = f32 LE
    out.push_back(std::uint8_t(t.dims.size()));
    for (auto d : t.dims) put_u32le(out, d);
    std::size_t payload_at = out.size();
    out.resize(payload_at + 4 * n);
    static_assert(sizeof(float) == 4);
    std::memcpy(out.data() + payload_at, t.data.data(), 4 * n);
    return out;
}

Tensor decode_tensor(const std::uint8_t* bytes, std::size_t n, std::size_t base) {
    if (n < 4 || std::memcmp(bytes, "GCT1", 4) != 0)
        throw FormatError("bad tensor magic, expected GCT1", base + 0);
    if (n < 6) throw FormatError("truncated tensor header", base + n);
    if (bytes[4] != 0) throw FormatError("unsupported dtype code", base + 4);
    std::size_t ndim = bytes[5];
    std::size_t header = 6 + 4 * ndim;
    if (n < header) throw FormatError("truncated dims", base + n);
    std::vector<std::uint32_t> dims(ndim);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < ndim; ++i) {
        dims[i] = get_u32le(bytes + 6 + 4 * i);
        count *= dims[i];
        if (count > (std::uint64_t(1) << 32))
            throw FormatError("dimension overflow", base + 6 + 4 * i);
    }
    if (n < header + 4 * count) throw FormatError("truncated payload", base + n);
    Tensor t;
    t.dims = std::move(dims);
    t.data.resize(count);
    std::memcpy(t.data.data(), bytes + header, 4 * count);
    return t;
}

void atomic_write_bytes(const std::filesystem::path& path, const void* data, std::size_t n) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot open for writing: " + tmp.string());
        f.write(static_cast<const char*>(data), std::streamsize(n));
        if (!f) throw ConfigError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    atomic_write_bytes(path, text.data(), text.size());
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open: " + path.string());
    f.seekg(0, std::ios::end);
    std::vector<std::uint8_t> bytes(std::size_t(f.tellg()));
    f.seekg(0);
    f.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw ConfigError("read failed: " + path.string());
    return bytes;
}

void write_tensor(const std::filesystem::path& path, const Tensor& t) {
    auto bytes = encode_tensor(t);
    atomic_write_bytes(path, bytes.data(), bytes.size());
}

Tensor read_tensor(const std::filesystem::path& path) {
    auto bytes = read_file_bytes(path);
    return decode_tensor(bytes.data(), bytes.size());
}

void write_pgm(const std::filesystem::path& path, const Vec& image, int width, int height) {
    if (int(image.size()) != width * height) throw UsageError("pgm: size mismatch");
    std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    bytes.reserve(bytes.size() + image.size());
    for (float v : image) {
        double q = std::lround((double(v) + 1.0) * 0.5 * 255.0);
        bytes.push_back(std::uint8_t(std::min(255.0, std::max(0.0, q))));
    }
    atomic_write_bytes(path, bytes.data(), bytes.size());
}

std::pair<Vec, std::pair<int, int>> read_pgm(const std::filesystem::path& path) {
    auto bytes = read_file_bytes(path);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(bytes[pos])) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_int = [&]() -> long {
        skip_ws();
        std::size_t start = pos;
        long v = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            v = v * 10 + (bytes[pos] - '0');
            ++pos;
        }
        if (pos == start) throw FormatError("expected integer in pgm header", start);
        return v;
    };
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw FormatError("bad pgm magic, expected P5", 0);
    pos = 2;
    long w = read_int();
    long h = read_int();
    long maxval = read_int();
    if (maxval != 255) throw FormatError("pgm maxval must be 255", pos);
    ++pos;  // single whitespace after maxval
    if (bytes.size() < pos + std::size_t(w * h)) throw FormatError("truncated pgm payload", bytes.size());
    Vec img(std::size_t(w * h));
    for (std::size_t i = 0; i < img.size(); ++i)
        img[i] = float(double(bytes[pos + i]) / 255.0 * 2.0 - 1.0);
    return {std::move(img), {int(w), int(h)}};
}

void write_checkpoint(const std::filesystem::path& path, const std::vector<NamedTensor>& entries) {
    std::vector<std::uint8_t> out;
    out.insert(out.end(), {'G', 'C', 'K', 'P'});
    put_u32le(out, std::uint32_t(entries.size()));
    for (const auto& e : entries) {
        if (e.name.size() > 0xffff) throw UsageError("checkpoint entry name too long");
        out.push_back(std::uint8_t(e.name.size() & 0xff));
        out.push_back(std::uint8_t(e.name.size() >> 8));
        out.insert(out.end(), e.name.begin(), e.name.end());
        auto rec = encode_tensor(e.tensor);
        out.insert(out.end(), rec.begin(), rec.end());
    }
    atomic_write_bytes(path, out.data(), out.size());
}

std::vector<NamedTensor> read_checkpoint(const std::filesystem::path& path) {
    auto bytes = read_file_bytes(path);
    if (bytes.size() < 4 || std::memcmp(bytes.data(), "GCKP", 4) != 0)
        throw FormatError("bad checkpoint magic, expected GCKP", 0);
    if (bytes.size() < 8) throw FormatError("truncated checkpoint header", bytes.size());
    std::uint32_t count = get_u32le(bytes.data() + 4);
    std::size_t pos = 8;
    std::vector<NamedTensor> entries;
    entries.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        if (bytes.size() < pos + 2) throw FormatError("truncated entry name length", pos);
        std::size_t name_len = bytes[pos] | (std::size_t(bytes[pos + 1]) << 8);
        pos += 2;
        if (bytes.size() < pos + name_len) throw FormatError("truncated entry name", pos);
        std::string name(reinterpret_cast<const char*>(bytes.data() + pos), name_len);
        pos += name_len;
        Tensor t = decode_tensor(bytes.data() + pos, bytes.size() - pos, pos);
        std::size_t ndim = bytes[pos + 5];
        std::size_t rec = 6 + 4 * ndim + 4 * t.size();
        pos += rec;
        entries.push_back({std::move(name), std::move(t)});
    }
    return entries;
}

}  // namespace gencurve
