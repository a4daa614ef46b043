#include "orthopack/report.hpp"

#include <array>
#include <cstdint>
#include <sstream>

#include "orthopack/errors.hpp"
#include "orthopack/json_io.hpp"

namespace orthopack {

namespace {

// FIPS 180-4 SHA-256, single-shot over a byte string.
class Sha256 {
 public:
  std::array<std::uint8_t, 32> digest(const std::string& bytes) {
    std::uint64_t length = bytes.size();
    std::string padded = bytes;
    padded.push_back(static_cast<char>(0x80));
    while (padded.size() % 64 != 56) padded.push_back('\0');
    for (int i = 7; i >= 0; --i) padded.push_back(static_cast<char>((length * 8) >> (8 * i)));
    for (std::size_t off = 0; off < padded.size(); off += 64)
      compress(reinterpret_cast<const std::uint8_t*>(padded.data()) + off);
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 8; ++i)
      for (int b = 0; b < 4; ++b) out[4 * i + b] = static_cast<std::uint8_t>(h_[i] >> (24 - 8 * b));
    return out;
  }

 private:
  static std::uint32_t rotr(std::uint32_t v, int s) { return (v >> s) | (v << (32 - s)); }

  void compress(const std::uint8_t* chunk) {
    static constexpr std::uint32_t k[64] = {
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
        0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
        0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
        0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
        0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
        0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
        0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
        0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
        0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
        0xc67178f2};
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i)
      w[i] = (std::uint32_t(chunk[4 * i]) << 24) | (std::uint32_t(chunk[4 * i + 1]) << 16) |
             (std::uint32_t(chunk[4 * i + 2]) << 8) | std::uint32_t(chunk[4 * i + 3]);
    for (int i = 16; i < 64; ++i) {
      const std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      const std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3];
    std::uint32_t e = h_[4], f = h_[5], g = h_[6], h = h_[7];
    for (int i = 0; i < 64; ++i) {
      const std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      const std::uint32_t ch = (e & f) ^ (~e & g);
      const std::uint32_t t1 = h + s1 + ch + k[i] + w[i];
      const std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      const std::uint32_t t2 = s0 + maj;
      h = g;
      g = f;
      f = e;
      e = d + t1;
      d = c;
      c = b;
      b = a;
      a = t1 + t2;
    }
    h_[0] += a;
    h_[1] += b;
    h_[2] += c;
    h_[3] += d;
    h_[4] += e;
    h_[5] += f;
    h_[6] += g;
    h_[7] += h;
  }

  std::uint32_t h_[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                         0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
};

const char* verdict_label(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "UNDECIDABLE";
  }
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  const auto digest = Sha256().digest(bytes);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (const std::uint8_t b : digest) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 0xf]);
  }
  return out;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& [path, digest] : r.inputs)
    inputs.push_back(nlohmann::json{{"path", path}, {"sha256", digest}});
  nlohmann::json certs = nlohmann::json::array();
  for (const Certificate& c : r.certificates) certs.push_back(nlohmann::json(c));
  nlohmann::json j{{"schema", kReportSchema},
                   {"command", r.command},
                   {"inputs", std::move(inputs)},
                   {"certificates", std::move(certs)},
                   {"version", r.version}};
  if (r.include_timings) j["timings"] = r.timings;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kReportSchema)
    throw ValidationError("expected a report artifact");
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& row : j.at("inputs"))
    r.inputs.emplace_back(row.at("path").get<std::string>(), row.at("sha256").get<std::string>());
  for (const auto& c : j.at("certificates")) r.certificates.push_back(c.get<Certificate>());
  if (j.contains("timings")) {
    r.include_timings = true;
    r.timings = j.at("timings").get<std::map<std::string, double>>();
  }
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string render_report_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "version: " << r.version << "\n";
  for (const auto& [path, digest] : r.inputs)
    out << "input: " << path << " sha256=" << digest << "\n";
  for (const Certificate& c : r.certificates) {
    out << "[" << verdict_label(c.verdict) << "] " << c.check;
    if (c.evidence_only) out << " (evidence only)";
    if (!c.details.empty()) out << " " << c.details.dump();
    out << "\n";
    if (c.verdict != Verdict::Pass && !c.witness.is_null())
      out << "  witness: " << c.witness.dump() << "\n";
  }
  if (r.include_timings)
    for (const auto& [step, seconds] : r.timings) out << "time: " << step << " " << seconds << "s\n";
  return out.str();
}

std::string render_report_csv(const Report& r) {
  std::ostringstream out;
  out << "check,verdict,evidence_only\n";
  for (const Certificate& c : r.certificates)
    out << c.check << "," << verdict_label(c.verdict) << "," << (c.evidence_only ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace orthopack
