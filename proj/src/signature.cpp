#include "fuchs/signature.hpp"

#include "fuchs/error.hpp"

#include <algorithm>

namespace fuchs {

namespace {

std::uint64_t parse_u64(const std::string& tok, std::string_view whole) {
  if (tok.empty() || tok.size() > 12 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(ErrorKind::ParseError, "bad integer '" + tok + "' in signature '" + std::string(whole) + "'");
  }
  return std::stoull(tok);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

FuchsianSignature parse_signature(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  const auto parts = split(s, ':');
  if (parts.size() < 2 || parts.size() > 3) fail(ErrorKind::ParseError, "signature '" + s + "' must look like o:g=0:m=2,3,7");
  FuchsianSignature sig;
  if (parts[0] == "o") {
    sig.v = 2;
  } else if (parts[0] == "n") {
    sig.v = 1;
  } else {
    fail(ErrorKind::ParseError, "orientation must be 'o' or 'n', got '" + parts[0] + "'");
  }
  if (parts[1].rfind("g=", 0) != 0) fail(ErrorKind::ParseError, "expected g=<genus> in '" + s + "'");
  sig.genus = parse_u64(parts[1].substr(2), text);
  if (parts.size() == 3) {
    if (parts[2].rfind("m=", 0) != 0) fail(ErrorKind::ParseError, "expected m=<orders> in '" + s + "'");
    const std::string list = parts[2].substr(2);
    if (!list.empty()) {
      for (const auto& tok : split(list, ',')) sig.periods.push_back(parse_u64(tok, text));
    }
  }
  check_signature_fields(sig);
  return sig;
}

std::string to_string(const FuchsianSignature& sig) {
  std::string out = std::string(sig.v == 2 ? "o" : "n") + ":g=" + std::to_string(sig.genus);
  if (!sig.periods.empty()) out += ":m=";
  for (std::size_t i = 0; i < sig.periods.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.periods[i]);
  }
  return out;
}

void check_signature_fields(const FuchsianSignature& sig) {
  if (sig.v != 1 && sig.v != 2) fail(ErrorKind::SignatureInvalid, "v must be 1 or 2");
  if (sig.v == 1 && sig.genus < 1) fail(ErrorKind::SignatureInvalid, "non-oriented signatures need g >= 1");
  for (auto m : sig.periods) {
    if (m < 2) fail(ErrorKind::SignatureInvalid, "elliptic orders must be at least 2");
  }
}

}  // namespace fuchs
