#include "hamw/pointset_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hamw {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::size_t parse_count(const std::string& token, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw UsageError(std::string("bad ") + what + " in point-set header: '" + token + "'");
  return value;
}

template <Scalar S>
Configuration<S> read_body(std::istream& in, std::size_t n, std::size_t dim, std::size_t& line_no) {
  std::vector<Point<S>> points;
  points.reserve(n);
  std::array<S, 3> buf{};
  std::string line;
  while (points.size() < n && std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_tokens(line);
    if (tokens.size() != dim)
      throw UsageError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) + " coordinates");
    for (std::size_t i = 0; i < dim; ++i) {
      if constexpr (is_exact<S>)
        buf[i] = parse_rational(tokens[i]);
      else
        buf[i] = parse_double(tokens[i]);
    }
    points.emplace_back(std::span<const S>(buf.data(), dim));
  }
  if (points.size() != n)
    throw UsageError("point-set declares " + std::to_string(n) + " points but has " + std::to_string(points.size()));
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank_or_comment(line)) throw UsageError("line " + std::to_string(line_no) + ": trailing data");
  }
  return Configuration<S>(std::move(points));
}

}  // namespace

AnyConfiguration read_point_set(std::istream& in, std::optional<ScalarMode> as_mode) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    header = split_tokens(line);
    break;
  }
  if (header.size() != 6 || header[0] != "points" || header[2] != "dim" || header[4] != "mode")
    throw UsageError("missing header 'points <n> dim <d> mode <float|rational>'");
  const std::size_t n = parse_count(header[1], "point count");
  const std::size_t dim = parse_count(header[3], "dimension");
  const ScalarMode declared = parse_mode(header[5]);
  if (n < 3) throw UsageError("a point set needs at least 3 points");
  if (dim != 2 && dim != 3) throw UsageError("dimension must be 2 or 3");

  if (as_mode.value_or(declared) == ScalarMode::Rational) return read_body<Rational>(in, n, dim, line_no);
  return read_body<double>(in, n, dim, line_no);
}

template <Scalar S>
void write_point_set(std::ostream& out, const Configuration<S>& c) {
  out << "points " << c.size() << " dim " << c.dim() << " mode " << mode_name(mode_of<S>) << '\n';
  for (const auto& p : c.points()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) out << ' ';
      out << format_scalar(p[i]);
    }
    out << '\n';
  }
}

void write_point_set(std::ostream& out, const AnyConfiguration& c) {
  std::visit([&out](const auto& cfg) { write_point_set(out, cfg); }, c);
}

template void write_point_set(std::ostream&, const Configuration<double>&);
template void write_point_set(std::ostream&, const Configuration<Rational>&);

}  // namespace hamw
