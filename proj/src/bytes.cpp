#include "kexlearn/bytes.hpp"

namespace kexlearn {

std::string to_hex(BytesView b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (auto v : b) {
        s.push_back(digits[v >> 4]);
        s.push_back(digits[v & 0xf]);
    }
    return s;
}

Bytes from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ParseError("invalid hex digit");
    };
    if (hex.size() % 2 != 0) throw ParseError("odd hex length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    return out;
}

void ByteWriter::uint32(std::uint32_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 24));
    out_.push_back(static_cast<std::uint8_t>(v >> 16));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
}

void ByteWriter::string(BytesView b) {
    uint32(static_cast<std::uint32_t>(b.size()));
    raw(b);
}

void ByteWriter::string(std::string_view s) {
    uint32(static_cast<std::uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
}

void ByteWriter::mpint(BytesView minimal_twos_complement) {
    string(minimal_twos_complement);
}

void ByteWriter::name_list(const std::vector<std::string>& names) {
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) joined.push_back(',');
        joined += names[i];
    }
    string(joined);
}

std::uint8_t ByteReader::byte() {
    if (pos_ >= data_.size()) throw ParseError("read past end (byte)");
    return data_[pos_++];
}

std::uint32_t ByteReader::uint32() {
    if (remaining() < 4) throw ParseError("read past end (uint32)");
    std::uint32_t v = (std::uint32_t(data_[pos_]) << 24) | (std::uint32_t(data_[pos_ + 1]) << 16) |
                      (std::uint32_t(data_[pos_ + 2]) << 8) | std::uint32_t(data_[pos_ + 3]);
    pos_ += 4;
    return v;
}

Bytes ByteReader::string() {
    std::uint32_t len = uint32();
    if (remaining() < len) throw ParseError("read past end (string)");
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + len);
    pos_ += len;
    return out;
}

std::vector<std::string> ByteReader::name_list() {
    Bytes raw = string();
    std::vector<std::string> names;
    std::string cur;
    for (auto c : raw) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(static_cast<char>(c));
        }
    }
    if (!cur.empty() || !raw.empty()) names.push_back(cur);
    return names;
}

Bytes ByteReader::rest() {
    Bytes out(data_.begin() + pos_, data_.end());
    pos_ = data_.size();
    return out;
}

Bytes mpint_from_unsigned(BytesView magnitude) {
    std::size_t i = 0;
    while (i < magnitude.size() && magnitude[i] == 0) ++i;
    Bytes out;
    if (i == magnitude.size()) return out; // zero encodes as empty
    if (magnitude[i] & 0x80) out.push_back(0);
    out.insert(out.end(), magnitude.begin() + i, magnitude.end());
    return out;
}

} // namespace kexlearn
