#include "mtsi/io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace mtsi {

namespace wire {

void Writer::u16(std::uint16_t v) {
  buf_.push_back(static_cast<std::uint8_t>(v & 0xff));
  buf_.push_back(static_cast<std::uint8_t>(v >> 8));
}

void Writer::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void Writer::f32(float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  u32(bits);
}

void Writer::f64(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

void Writer::magic(const char tag[4]) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(tag[i]));
}

void Writer::to_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(buf_.data()),
            static_cast<std::streamsize>(buf_.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

Reader Reader::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return Reader(std::move(bytes));
}

void Reader::need(std::size_t n) {
  if (at_ + n > buf_.size()) throw FormatError("truncated payload", at_);
}

std::uint8_t Reader::u8() {
  need(1);
  return buf_[at_++];
}

std::uint16_t Reader::u16() {
  need(2);
  std::uint16_t v = static_cast<std::uint16_t>(buf_[at_] | (buf_[at_ + 1] << 8));
  at_ += 2;
  return v;
}

std::uint32_t Reader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf_[at_ + i]) << (8 * i);
  at_ += 4;
  return v;
}

float Reader::f32() {
  std::uint32_t bits = u32();
  float v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

double Reader::f64() {
  need(8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(buf_[at_ + i]) << (8 * i);
  at_ += 8;
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

void Reader::expect_magic(const char tag[4], const std::string& format_name) {
  const std::size_t start = at_;
  need(4);
  for (int i = 0; i < 4; ++i) {
    if (buf_[start + i] != static_cast<std::uint8_t>(tag[i]))
      throw FormatError("bad magic, not a " + format_name + " file", start);
  }
  at_ += 4;
}

void Reader::expect_exhausted() {
  if (at_ != buf_.size()) throw FormatError("trailing bytes after payload", at_);
}

}  // namespace wire

namespace {

constexpr std::uint32_t kMaxDim = 1u << 24;
constexpr std::uint64_t kMaxCells = 1ull << 28;

void check_dims(std::uint32_t v_count, std::uint32_t t_count, std::size_t offset) {
  if (v_count == 0 || t_count == 0)
    throw FormatError("dimensions must be nonzero", offset);
  if (v_count > kMaxDim || t_count > kMaxDim ||
      static_cast<std::uint64_t>(v_count) * t_count > kMaxCells)
    throw FormatError("dimension overflow", offset);
}

}  // namespace

MaskedRecording read_recording(const std::string& path) {
  wire::Reader r = wire::Reader::from_file(path);
  r.expect_magic("MTSR", "MTSR");
  const std::size_t version_at = r.offset();
  const std::uint16_t version = r.u16();
  if (version != 1)
    throw FormatError("unsupported MTSR version " + std::to_string(version),
                      version_at);
  const std::size_t dims_at = r.offset();
  const std::uint32_t v_count = r.u32();
  const std::uint32_t t_count = r.u32();
  check_dims(v_count, t_count, dims_at);
  const std::uint8_t flags = r.u8();
  const bool has_truth = (flags & 1u) != 0;

  MaskedRecording rec;
  rec.coords.resize(v_count, 3);
  for (std::uint32_t v = 0; v < v_count; ++v)
    for (int c = 0; c < 3; ++c) rec.coords(v, c) = r.f32();
  rec.values.resize(v_count, t_count);
  for (std::uint32_t v = 0; v < v_count; ++v)
    for (std::uint32_t t = 0; t < t_count; ++t) rec.values(v, t) = r.f64();
  rec.mask.resize(v_count, t_count);
  for (std::uint32_t v = 0; v < v_count; ++v)
    for (std::uint32_t t = 0; t < t_count; ++t) rec.mask(v, t) = r.u8();
  if (has_truth) {
    Matrix truth(v_count, t_count);
    for (std::uint32_t v = 0; v < v_count; ++v)
      for (std::uint32_t t = 0; t < t_count; ++t) truth(v, t) = r.f64();
    rec.truth = std::move(truth);
  }
  r.expect_exhausted();
  return rec;
}

void write_recording(const MaskedRecording& rec, const std::string& path) {
  wire::Writer w;
  w.magic("MTSR");
  w.u16(1);
  w.u32(static_cast<std::uint32_t>(rec.values.rows()));
  w.u32(static_cast<std::uint32_t>(rec.values.cols()));
  w.u8(rec.truth ? 1 : 0);
  for (Eigen::Index v = 0; v < rec.coords.rows(); ++v)
    for (int c = 0; c < 3; ++c) w.f32(static_cast<float>(rec.coords(v, c)));
  for (Eigen::Index v = 0; v < rec.values.rows(); ++v)
    for (Eigen::Index t = 0; t < rec.values.cols(); ++t) w.f64(rec.values(v, t));
  for (Eigen::Index v = 0; v < rec.mask.rows(); ++v)
    for (Eigen::Index t = 0; t < rec.mask.cols(); ++t) w.u8(rec.mask(v, t));
  if (rec.truth) {
    for (Eigen::Index v = 0; v < rec.truth->rows(); ++v)
      for (Eigen::Index t = 0; t < rec.truth->cols(); ++t) w.f64((*rec.truth)(v, t));
  }
  w.to_file(path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

MaskedRecording read_recording_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty CSV file", 0);
  auto header = split_csv_line(line);
  if (header.size() < 5 || header[0] != "voxel" || header[1] != "x" ||
      header[2] != "y" || header[3] != "z")
    throw FormatError("CSV header must be voxel,x,y,z,t0..", 0);
  const std::size_t t_count = header.size() - 4;

  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw FormatError("CSV row has wrong cell count", rows.size() + 1);
    rows.push_back(std::move(cells));
  }
  const std::size_t v_count = rows.size();
  if (v_count == 0) throw FormatError("CSV has no data rows", 0);

  MaskedRecording rec;
  rec.values.resize(v_count, t_count);
  rec.mask.resize(v_count, t_count);
  rec.coords.resize(v_count, 3);
  std::vector<bool> seen(v_count, false);
  for (const auto& cells : rows) {
    const long v = std::stol(cells[0]);
    if (v < 0 || static_cast<std::size_t>(v) >= v_count || seen[v])
      throw FormatError("CSV voxel indices must be a permutation of 0..V-1", 0);
    seen[v] = true;
    for (int c = 0; c < 3; ++c) rec.coords(v, c) = std::stod(cells[1 + c]);
    for (std::size_t t = 0; t < t_count; ++t) {
      const std::string& cell = cells[4 + t];
      if (cell.empty()) {
        rec.values(v, t) = std::numeric_limits<double>::quiet_NaN();
        rec.mask(v, t) = 1;
      } else {
        rec.values(v, t) = std::stod(cell);
        rec.mask(v, t) = 0;
      }
    }
  }
  validate_masked(rec);  // rejects partial-row missingness
  return rec;
}

}  // namespace mtsi
