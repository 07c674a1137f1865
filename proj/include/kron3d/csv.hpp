#ifndef KRON3D_CSV_HPP
#define KRON3D_CSV_HPP

#include <string>
#include <type_traits>

namespace kron3d {

// Formats a double with "%.12g", the numeric format of every CSV output.
std::string format_number(double value);

// CSV writer with LF line endings. Content accumulates in memory and lands on
// disk atomically (write to a temp file, then rename) when commit() is called.
class CsvWriter {
  public:
    CsvWriter(std::string path, const std::string &header);
    ~CsvWriter();

    CsvWriter(const CsvWriter &) = delete;
    CsvWriter &operator=(const CsvWriter &) = delete;

    // Appends one row; each argument becomes one cell. Arithmetic values go
    // through format_number, strings are written verbatim.
    template <typename... Cells> void row(const Cells &...cells) {
        bool first = true;
        (append_cell(cells, first), ...);
        buffer_ += '\n';
    }

    void commit();

  private:
    void append_cell(const std::string &cell, bool &first);
    void append_cell(const char *cell, bool &first);
    void append_cell(double cell, bool &first);
    void append_cell(long long cell, bool &first);
    template <typename T> void append_cell(const T &cell, bool &first) {
        if constexpr (std::is_floating_point_v<T>) {
            append_cell(static_cast<double>(cell), first);
        } else {
            append_cell(static_cast<long long>(cell), first);
        }
    }

    std::string path_;
    std::string buffer_;
    bool committed_ = false;
};

} // namespace kron3d

#endif
