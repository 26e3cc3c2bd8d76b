#include "tomolab/io.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace tomolab {

Json matrix_to_json(const CMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: matrix not square");
  const int d = static_cast<int>(m.rows());
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < d; ++i) {
    Json re_row = Json::array(), im_row = Json::array();
    for (int j = 0; j < d; ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"d", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMat matrix_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  if (d < 1) throw std::invalid_argument("matrix_from_json: bad dimension");
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (int(re.size()) != d || int(im.size()) != d) throw std::invalid_argument("matrix_from_json: row count mismatch");
  CMat m(d, d);
  for (int i = 0; i < d; ++i) {
    if (int(re[i].size()) != d || int(im[i].size()) != d)
      throw std::invalid_argument("matrix_from_json: column count mismatch");
    for (int k = 0; k < d; ++k) m(i, k) = Complex(re[i][k].get<double>(), im[i][k].get<double>());
  }
  return m;
}

Json povm_to_json(const Povm& m) {
  Json elements = Json::array();
  for (const CMat& e : m.elements()) elements.push_back(matrix_to_json(e));
  return Json{{"d", m.dim()}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const Json& j) {
  std::vector<CMat> elements;
  for (const Json& e : j.at("elements")) elements.push_back(matrix_from_json(e));
  return Povm(std::move(elements));
}

Json packing_to_json(const PackingResult& r) {
  Json unitaries = Json::array();
  for (const CMat& u : r.unitaries) unitaries.push_back(matrix_to_json(u));
  Json constraints = Json::array();
  for (const ConstraintStats& c : r.constraints)
    constraints.push_back(Json{{"name", c.name}, {"rejections", c.rejections}, {"vacuous", c.rejections == 0}});
  return Json{{"d", r.d},
              {"separation", r.separation},
              {"size", r.unitaries.size()},
              {"complete", r.complete},
              {"n_draws", r.n_draws},
              {"n_rejected", r.n_rejected},
              {"constraints", std::move(constraints)},
              {"unitaries", std::move(unitaries)}};
}

void write_sketch_jsonl(const ShadowSketch& sketch, std::ostream& os) {
  os << Json{{"d", sketch.d}, {"n", sketch.records.size()}, {"base_key", std::to_string(sketch.base_key)}}.dump()
     << '\n';
  for (const ShadowRecord& rec : sketch.records)
    os << Json{{"k", rec.path_index}, {"j", rec.outcome}}.dump() << '\n';
}

ShadowSketch read_sketch_jsonl(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_sketch_jsonl: missing header");
  const Json header = Json::parse(line);
  ShadowSketch sketch;
  sketch.d = header.at("d").get<int>();
  sketch.base_key = std::stoull(header.at("base_key").get<std::string>());
  const std::size_t n = header.at("n").get<std::size_t>();
  const RngStream base = RngStream::from_key(sketch.base_key);
  sketch.records.reserve(n);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    const std::uint64_t k = j.at("k").get<std::uint64_t>();
    RngStream u_stream = base.child(k).child(0);
    HaarUnitary u = haar_unitary(sketch.d, u_stream);
    sketch.records.push_back({k, std::move(u.matrix), j.at("j").get<int>()});
  }
  if (sketch.records.size() != n) throw std::runtime_error("read_sketch_jsonl: record count mismatch");
  return sketch;
}

}  // namespace tomolab
