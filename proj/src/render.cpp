#include "mlc/render.hpp"

#include <sstream>

#include "json.hpp"

namespace mlc {

RenderSpec::RenderSpec(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != 2 || hi.size() != 2) throw std::invalid_argument("render window must be rank 2");
  if (!vec_leq(lo, hi)) throw std::invalid_argument("render window is empty");
}

std::string render_ascii(const Region& support, const RenderSpec& spec) {
  if (support.dim != 2) throw std::invalid_argument("ascii render needs a rank-2 region");
  std::ostringstream os;
  int label_width = 0;
  for (std::int64_t y = spec.lo[1]; y <= spec.hi[1]; ++y)
    label_width = std::max(label_width, static_cast<int>(std::to_string(y).size()));
  for (std::int64_t y = spec.hi[1]; y >= spec.lo[1]; --y) {
    std::string label = std::to_string(y);
    os << std::string(label_width - label.size(), ' ') << label << " |";
    for (std::int64_t x = spec.lo[0]; x <= spec.hi[0]; ++x)
      os << ' ' << (support.contains(Vec{x, y}) ? '*' : '.');
    os << "\n";
  }
  os << std::string(label_width, ' ') << " +";
  for (std::int64_t x = spec.lo[0]; x <= spec.hi[0]; ++x) os << "--";
  os << "\n" << std::string(label_width, ' ') << "  ";
  for (std::int64_t x = spec.lo[0]; x <= spec.hi[0]; ++x) {
    std::string sx = std::to_string(x);
    os << ' ' << (x % 5 == 0 ? sx.back() : (x == spec.lo[0] ? sx.back() : ' '));
  }
  os << "\n# x: " << spec.xlabel << " in [" << spec.lo[0] << "," << spec.hi[0] << "]  y: " << spec.ylabel
     << " in [" << spec.lo[1] << "," << spec.hi[1] << "]\n";
  return os.str();
}

std::string render_svg(const Region& support, const RenderSpec& spec) {
  if (support.dim != 2) throw std::invalid_argument("svg render needs a rank-2 region");
  const int cell = 14, margin = 20;
  auto px = [&](std::int64_t x) { return margin + static_cast<int>(x - spec.lo[0]) * cell; };
  auto py = [&](std::int64_t y) { return margin + static_cast<int>(spec.hi[1] - y) * cell; };
  int width = 2 * margin + static_cast<int>(spec.hi[0] - spec.lo[0]) * cell;
  int height = 2 * margin + static_cast<int>(spec.hi[1] - spec.lo[1]) * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  // axes through the origin when visible
  if (spec.lo[0] <= 0 && 0 <= spec.hi[0])
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(spec.hi[1]) << "\" x2=\"" << px(0) << "\" y2=\""
       << py(spec.lo[1]) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (spec.lo[1] <= 0 && 0 <= spec.hi[1])
    os << "  <line x1=\"" << px(spec.lo[0]) << "\" y1=\"" << py(0) << "\" x2=\"" << px(spec.hi[0])
       << "\" y2=\"" << py(0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (std::int64_t y = spec.hi[1]; y >= spec.lo[1]; --y)
    for (std::int64_t x = spec.lo[0]; x <= spec.hi[0]; ++x) {
      bool in = support.contains(Vec{x, y});
      os << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << (in ? 4 : 1)
         << "\" fill=\"" << (in ? "black" : "#bbbbbb") << "\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

namespace {

nlohmann::json box_json(const Box& b, std::optional<int> payload) {
  nlohmann::json j;
  j["lo"] = nlohmann::json::array();
  j["hi"] = nlohmann::json::array();
  for (const auto& iv : b.iv) {
    j["lo"].push_back(iv.lo_inf ? nlohmann::json(nullptr) : nlohmann::json(iv.lo));
    j["hi"].push_back(iv.hi_inf ? nlohmann::json(nullptr) : nlohmann::json(iv.hi));
  }
  if (payload) j["dim"] = *payload;
  return j;
}

}  // namespace

std::string region_json(const std::vector<std::pair<Box, int>>& cells, int dim) {
  nlohmann::json j;
  j["rank"] = dim;
  j["boxes"] = nlohmann::json::array();
  for (const auto& [box, payload] : cells) j["boxes"].push_back(box_json(box, payload));
  return j.dump(2) + "\n";
}

std::string region_json(const Region& region) {
  nlohmann::json j;
  j["rank"] = region.dim;
  j["boxes"] = nlohmann::json::array();
  for (const auto& box : region.boxes) j["boxes"].push_back(box_json(box, std::nullopt));
  return j.dump(2) + "\n";
}

}  // namespace mlc
