#include "detourlab/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#include "detourlab/error.hpp"

namespace detourlab {

namespace {

constexpr std::string_view kMagic{"DTLCKPT\0", 8};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Writer {
 public:
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void raw(std::string_view s) { out_.append(s); }
  std::string& str() { return out_; }

 private:
  void put(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::string raw(std::size_t len) {
    need(len);
    std::string s(in_.substr(pos_, len));
    pos_ += len;
    return s;
  }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParseError, "checkpoint: " + what, pos_);
  }

 private:
  void need(std::size_t len) const {
    if (in_.size() - pos_ < len) fail("truncated");
  }
  std::uint64_t get(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + static_cast<std::size_t>(i)])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(width);
    return v;
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_checkpoint(const Checkpoint& cp) {
  Writer w;
  w.raw(kMagic);
  w.u32(Checkpoint::kVersion);
  w.u64(cp.spec_hash);
  w.u32(cp.unit_order);
  w.u64(cp.units_total);
  w.u64(cp.completed_units.size());
  for (auto id : cp.completed_units) w.u64(id);
  w.u32(static_cast<std::uint32_t>(cp.counts.size()));
  for (const auto& [order, c] : cp.counts) {
    w.u32(static_cast<std::uint32_t>(order));
    w.u64(c.examined);
    w.u64(c.hits);
  }
  w.u64(cp.hits.size());
  for (const auto& [unit, hit] : cp.hits) {
    w.u64(unit);
    w.u32(static_cast<std::uint32_t>(hit.order));
    w.u32(static_cast<std::uint32_t>(hit.size));
    w.u32(hit.girth.is_acyclic() ? 0U : static_cast<std::uint32_t>(hit.girth.value()));
    w.u32(static_cast<std::uint32_t>(hit.tau));
    w.u32(hit.connected ? 1U : 0U);
    w.u32(static_cast<std::uint32_t>(hit.graph6.size()));
    w.raw(hit.graph6);
  }
  w.u64(fnv1a(w.str()));
  return std::move(w.str());
}

Checkpoint parse_checkpoint(const std::string& bytes) {
  Reader r(bytes);
  if (r.raw(kMagic.size()) != kMagic) r.fail("bad magic");
  if (bytes.size() < kMagic.size() + 8) r.fail("truncated");
  const std::string_view body(bytes.data(), bytes.size() - 8);
  Reader tail(std::string_view(bytes).substr(bytes.size() - 8));
  if (tail.u64() != fnv1a(body)) r.fail("checksum mismatch");

  if (r.u32() != Checkpoint::kVersion) r.fail("unsupported version");
  Checkpoint cp;
  cp.spec_hash = r.u64();
  cp.unit_order = r.u32();
  cp.units_total = r.u64();
  const std::uint64_t done = r.u64();
  if (done > cp.units_total || done > r.remaining() / 8) r.fail("completed-unit count out of range");
  cp.completed_units.reserve(done);
  for (std::uint64_t i = 0; i < done; ++i) {
    const std::uint64_t id = r.u64();
    if (id >= cp.units_total || (!cp.completed_units.empty() && id <= cp.completed_units.back())) {
      r.fail("completed unit ids not ascending or out of range");
    }
    cp.completed_units.push_back(id);
  }
  const std::uint32_t orders = r.u32();
  for (std::uint32_t i = 0; i < orders; ++i) {
    const int order = static_cast<int>(r.u32());
    OrderCount c;
    c.examined = r.u64();
    c.hits = r.u64();
    cp.counts[order] = c;
  }
  const std::uint64_t hits = r.u64();
  if (hits > r.remaining() / 32) r.fail("hit count out of range");
  for (std::uint64_t i = 0; i < hits; ++i) {
    const std::uint64_t unit = r.u64();
    SearchHit hit;
    hit.order = static_cast<int>(r.u32());
    hit.size = static_cast<int>(r.u32());
    const auto g = r.u32();
    hit.girth = g == 0 ? Girth::acyclic() : Girth::finite(static_cast<int>(g));
    hit.tau = static_cast<int>(r.u32());
    hit.connected = r.u32() != 0;
    hit.graph6 = r.raw(r.u32());
    cp.hits.emplace_back(unit, std::move(hit));
  }
  if (r.remaining() != 8) r.fail("trailing bytes");
  return cp;
}

void checkpoint_save(const std::string& path, const Checkpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    const std::string bytes = serialize_checkpoint(cp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::kIo, "cannot write checkpoint " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot move checkpoint into place: " + ec.message());
}

Checkpoint checkpoint_resume(const std::string& path, std::uint64_t expected_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read checkpoint " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Checkpoint cp = parse_checkpoint(buf.str());
  if (cp.spec_hash != expected_hash) {
    throw Error(ErrorKind::kCheckpointMismatch, "checkpoint " + path + " was written for a different search");
  }
  return cp;
}

}  // namespace detourlab
