#include "kron3d/csv.hpp"

#include "kron3d/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <type_traits>

namespace kron3d {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

CsvWriter::CsvWriter(std::string path, const std::string &header) : path_(std::move(path)) {
    buffer_ = header;
    buffer_ += '\n';
}

CsvWriter::~CsvWriter() = default;

void CsvWriter::append_cell(const std::string &cell, bool &first) {
    if (!first) {
        buffer_ += ',';
    }
    first = false;
    buffer_ += cell;
}

void CsvWriter::append_cell(const char *cell, bool &first) {
    append_cell(std::string(cell), first);
}

void CsvWriter::append_cell(double cell, bool &first) {
    append_cell(format_number(cell), first);
}

void CsvWriter::append_cell(long long cell, bool &first) {
    append_cell(std::to_string(cell), first);
}

void CsvWriter::commit() {
    if (committed_) {
        return;
    }
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp + "' for writing");
        }
        out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
        if (!out) {
            throw IoError("short write to '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename '" + tmp + "' to '" + path_ + "': " + ec.message());
    }
    committed_ = true;
}

} // namespace kron3d
