#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gknn/features.hpp"

namespace gknn {

struct LabeledSample {
  int label = 0;                // digit class 0..9
  FeatureVector vector;         // must be normalized
  std::string meta;             // provenance (style/size); never used to classify
};

// Immutable collection of labeled, normalized feature vectors.
class ModelLibrary {
 public:
  static constexpr std::size_t dim = FeatureVector::dim;

  ModelLibrary() = default;
  explicit ModelLibrary(std::vector<LabeledSample> samples);

  const std::vector<LabeledSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

 private:
  std::vector<LabeledSample> samples_;
};

double euclidean_distance(const FeatureVector& a, const FeatureVector& b);

struct Neighbor {
  std::size_t index = 0;  // position in the model library
  double distance = 0.0;
  int label = 0;
};

struct Classification {
  int label = 0;
  std::vector<Neighbor> neighbors;  // k entries, ascending distance
  int k = 0;
};

// Majority vote over the k nearest samples. Distance ties at the k-th place
// go to the lower sample index; vote ties go to the class with the smaller
// summed distance, then to the smaller label.
Classification classify(const ModelLibrary& model, const FeatureVector& query, int k);

// Text format: header "GKNN 1 13", then one "label<TAB>f1 f2 ... f13" line
// per sample with 12 significant digits.
void save_model(const ModelLibrary& model, std::ostream& out);
std::string save_model_string(const ModelLibrary& model);
void save_model_file(const std::filesystem::path& path, const ModelLibrary& model);

ModelLibrary load_model(std::istream& in);
ModelLibrary load_model_string(std::string_view text);
ModelLibrary load_model_file(const std::filesystem::path& path);

}  // namespace gknn
