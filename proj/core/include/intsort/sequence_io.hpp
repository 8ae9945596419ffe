#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "intsort/record.hpp"

namespace intsort {

// Binary sequence file, all multi-byte fields little endian:
//   magic "ISRT" (0x49 0x53 0x52 0x54), version byte 0x01,
//   u64 case_id, u64 n, u64 range_bound, u64 seed, then n u64 keys.
// Tags are not stored; readers assign tag = position.
inline constexpr unsigned char kSequenceMagic[4] = {0x49, 0x53, 0x52, 0x54};
inline constexpr unsigned char kSequenceVersion = 0x01;

struct SequenceHeader {
    std::uint64_t case_id = 0;
    std::uint64_t n = 0;
    std::uint64_t range_bound = 0;
    std::uint64_t seed = 0;
};

struct SequenceFile {
    SequenceHeader header;
    RecordSeq records;
};

struct SequenceIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// header.n is taken from records.size(), not from the caller.
void write_sequence(const SequenceHeader& header, const RecordSeq& records,
                    std::ostream& out);
void write_sequence_file(const SequenceHeader& header, const RecordSeq& records,
                         const std::filesystem::path& path);

// Throws SequenceIoError on bad magic, unsupported version, truncation, or
// a key exceeding the declared range bound. Never returns partial data.
SequenceFile read_sequence(std::istream& in);
SequenceFile read_sequence_file(const std::filesystem::path& path);

}  // namespace intsort
