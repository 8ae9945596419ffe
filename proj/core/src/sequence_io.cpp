#include "intsort/sequence_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace intsort {

namespace {

constexpr std::size_t kReadChunkKeys = 1 << 16;

void put_u64le(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) {
        b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xff);
    }
    out.write(b.data(), b.size());
}

std::uint64_t load_u64le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | p[i];
    }
    return v;
}

std::uint64_t get_u64le(std::istream& in, const char* what) {
    std::array<unsigned char, 8> b;
    in.read(reinterpret_cast<char*>(b.data()), b.size());
    if (in.gcount() != static_cast<std::streamsize>(b.size())) {
        throw SequenceIoError(std::string("sequence file truncated in ") + what);
    }
    return load_u64le(b.data());
}

}  // namespace

void write_sequence(const SequenceHeader& header, const RecordSeq& records,
                    std::ostream& out) {
    out.write(reinterpret_cast<const char*>(kSequenceMagic), sizeof(kSequenceMagic));
    out.put(static_cast<char>(kSequenceVersion));
    put_u64le(out, header.case_id);
    put_u64le(out, static_cast<std::uint64_t>(records.size()));
    put_u64le(out, header.range_bound);
    put_u64le(out, header.seed);
    for (const Record& r : records) {
        put_u64le(out, r.key);
    }
    if (!out) {
        throw SequenceIoError("sequence write failed");
    }
}

void write_sequence_file(const SequenceHeader& header, const RecordSeq& records,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw SequenceIoError("cannot open " + path.string() + " for writing");
    }
    write_sequence(header, records, out);
    out.flush();
    if (!out) {
        throw SequenceIoError("sequence write to " + path.string() + " failed");
    }
}

SequenceFile read_sequence(std::istream& in) {
    std::array<unsigned char, 5> preamble;
    in.read(reinterpret_cast<char*>(preamble.data()), preamble.size());
    if (in.gcount() != static_cast<std::streamsize>(preamble.size())) {
        throw SequenceIoError("sequence file truncated in preamble");
    }
    if (std::memcmp(preamble.data(), kSequenceMagic, sizeof(kSequenceMagic)) != 0) {
        throw SequenceIoError("bad magic: not a sequence file");
    }
    if (preamble[4] != kSequenceVersion) {
        throw SequenceIoError("unsupported sequence file version " +
                              std::to_string(static_cast<int>(preamble[4])));
    }

    SequenceFile file;
    file.header.case_id = get_u64le(in, "header");
    file.header.n = get_u64le(in, "header");
    file.header.range_bound = get_u64le(in, "header");
    file.header.seed = get_u64le(in, "header");

    const std::uint64_t n = file.header.n;
    file.records.reserve(static_cast<std::size_t>(n));
    std::array<unsigned char, kReadChunkKeys * 8> chunk;
    std::uint64_t remaining = n;
    std::uint64_t position = 0;
    while (remaining > 0) {
        const std::size_t want =
            static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kReadChunkKeys));
        in.read(reinterpret_cast<char*>(chunk.data()),
                static_cast<std::streamsize>(want * 8));
        if (in.gcount() != static_cast<std::streamsize>(want * 8)) {
            throw SequenceIoError("sequence file truncated in payload");
        }
        for (std::size_t i = 0; i < want; ++i) {
            const std::uint64_t key = load_u64le(chunk.data() + i * 8);
            if (key > file.header.range_bound) {
                throw SequenceIoError("key " + std::to_string(key) + " at position " +
                                      std::to_string(position) +
                                      " exceeds declared range bound " +
                                      std::to_string(file.header.range_bound));
            }
            file.records.push_back(Record{key, position});
            ++position;
        }
        remaining -= want;
    }
    return file;
}

SequenceFile read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SequenceIoError("cannot open " + path.string() + " for reading");
    }
    return read_sequence(in);
}

}  // namespace intsort
