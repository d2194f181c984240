#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kexlearn {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(BytesView b) {
    return std::string(b.begin(), b.end());
}

std::string to_hex(BytesView b);
Bytes from_hex(std::string_view hex);

/// Thrown when a reader runs past the end of a buffer or a field is malformed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sequential writer for the RFC 4251 data types (byte, uint32, string, mpint, name-list).
class ByteWriter {
public:
    void byte(std::uint8_t v) { out_.push_back(v); }
    void raw(BytesView b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void boolean(bool v) { out_.push_back(v ? 1 : 0); }
    void uint32(std::uint32_t v);
    void string(BytesView b);
    void string(std::string_view s);
    // value must already be in minimal mpint form (see mpint_from_unsigned)
    void mpint(BytesView minimal_twos_complement);
    void name_list(const std::vector<std::string>& names);

    const Bytes& data() const { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

/// Sequential reader over a byte span; throws ParseError on underflow.
class ByteReader {
public:
    explicit ByteReader(BytesView b) : data_(b) {}

    std::uint8_t byte();
    bool boolean() { return byte() != 0; }
    std::uint32_t uint32();
    Bytes string();
    Bytes mpint() { return string(); }
    std::vector<std::string> name_list();
    Bytes rest();

    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }

private:
    BytesView data_;
    std::size_t pos_ = 0;
};

/// Strips leading zeros and prepends one back if the top bit is set,
/// yielding the minimal positive two's-complement form used by mpint.
Bytes mpint_from_unsigned(BytesView magnitude);

} // namespace kexlearn
