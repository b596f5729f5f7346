#include "fpchaos/kernel_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fpchaos/error.hpp"

namespace fpchaos {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& doc, const char* key) {
  require(doc.contains(key), ErrorCode::parse, std::string("kernel file: missing field '") + key + "'");
  const json& v = doc.at(key);
  if constexpr (std::is_integral_v<T>) {
    require(v.is_number_integer(), ErrorCode::parse, std::string("kernel file: '") + key + "' must be an integer");
    const auto wide = v.get<std::int64_t>();
    require(wide >= std::numeric_limits<T>::min() && wide <= std::numeric_limits<T>::max(), ErrorCode::parse,
            std::string("kernel file: '") + key + "' out of range");
  } else {
    require(v.is_number(), ErrorCode::parse, std::string("kernel file: '") + key + "' must be a number");
  }
  return v.get<T>();
}

}  // namespace

GridKernel parse_kernel_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, std::string("kernel file: ") + e.what());
  }
  require(doc.is_object(), ErrorCode::parse, "kernel file: top level must be an object");
  const int q = field<int>(doc, "q");
  const int bins = field<int>(doc, "bins");
  const double width = field<double>(doc, "cell_width");
  require(q >= 0, ErrorCode::parse, "kernel file: q must be >= 0");
  require(bins >= 1, ErrorCode::parse, "kernel file: bins must be >= 1");
  require(width > 0.0, ErrorCode::parse, "kernel file: cell_width must be positive");
  require(doc.contains("entries") && doc.at("entries").is_array(), ErrorCode::parse,
          "kernel file: 'entries' must be an array");

  GridKernel f(q, Grid{bins, width});
  std::set<std::size_t> seen;
  std::vector<int> index(static_cast<std::size_t>(q));
  for (const auto& e : doc.at("entries")) {
    require(e.is_array() && e.size() == static_cast<std::size_t>(q) + 2, ErrorCode::parse,
            "kernel file: each entry must be [i1..iq, re, im] with q+2 numbers");
    for (int i = 0; i < q; ++i) {
      const auto& v = e.at(static_cast<std::size_t>(i));
      require(v.is_number_integer(), ErrorCode::parse, "kernel file: entry index must be an integer");
      const auto x = v.get<std::int64_t>();
      require(x >= 0 && x < bins, ErrorCode::parse,
              "kernel file: entry index " + std::to_string(x) + " outside [0," + std::to_string(bins) + ")");
      index[static_cast<std::size_t>(i)] = static_cast<int>(x);
    }
    const auto& re = e.at(static_cast<std::size_t>(q));
    const auto& im = e.at(static_cast<std::size_t>(q) + 1);
    require(re.is_number() && im.is_number(), ErrorCode::parse, "kernel file: entry value must be numeric");
    const std::size_t flat = f.flat_index(index);
    require(seen.insert(flat).second, ErrorCode::parse, "kernel file: duplicate entry");
    f[flat] = Complex{re.get<double>(), im.get<double>()};
  }
  return f;
}

GridKernel load_kernel(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open kernel file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kernel_json(buf.str());
}

std::string kernel_to_json(const GridKernel& f) {
  json doc;
  doc["q"] = f.arity();
  doc["bins"] = f.bins();
  doc["cell_width"] = f.cell_width();
  json entries = json::array();
  std::vector<int> index(static_cast<std::size_t>(f.arity()));
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    if (f[flat] == Complex{0.0}) continue;
    std::size_t x = flat;
    for (int i = f.arity(); i-- > 0;) {
      index[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(f.bins()));
      x /= static_cast<std::size_t>(f.bins());
    }
    json row = json::array();
    for (int i : index) row.push_back(i);
    row.push_back(f[flat].real());
    row.push_back(f[flat].imag());
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

GridKernel random_mirror_symmetric(int q, Grid grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GridKernel f(q, grid);
  // Top 53 bits mapped to [-1, 1); avoids the implementation-defined
  // algorithm behind std::uniform_real_distribution.
  for (auto& v : f.values()) v = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
  GridKernel sym = f + adjoint(f);
  sym *= 0.5;
  return sym;
}

}  // namespace fpchaos
