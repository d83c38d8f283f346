#include <filesystem>
#include <fstream>
#include <random>

#include "coxrep/cache.hpp"
#include "doctest.h"

using namespace coxrep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("coxrep_cache_test_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("disabled cache never touches the disk") {
  const Cache c;
  CHECK_FALSE(c.enabled());
  const GroupSpec spec{2, 1, 1, RingMode::Mixed, Flavor::GL};
  const auto G = c.group(spec);
  CHECK(G->size() == 6);
  CHECK_FALSE(c.load_group(spec).has_value());
}

TEST_CASE("group and table round trip") {
  TempDir tmp;
  const Cache c(tmp.path);
  for (auto flavor : {Flavor::GL, Flavor::SL}) {
    const GroupSpec spec{3, 1, 1, RingMode::Equal, flavor};
    const auto G = c.group(spec);
    const auto t = c.table(spec, G);
    CHECK(fs::exists(c.group_path(spec)));
    CHECK(fs::exists(c.table_path(spec)));

    const auto G2 = c.load_group(spec);
    REQUIRE(G2.has_value());
    CHECK((*G2)->keys() == G->keys());
    CHECK((*G2)->classes().class_of == G->classes().class_of);
    CHECK((*G2)->classes().sizes == G->classes().sizes);
    CHECK((*G2)->name() == G->name());

    const auto t2 = c.load_table(spec, *G2);
    REQUIRE(t2.has_value());
    REQUIRE(t2->size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t2->irreducibles()[i].values == t.irreducibles()[i].values);
    CHECK(validate_table(*t2).ok());
  }
}

TEST_CASE("corrupt, truncated or foreign files are misses") {
  TempDir tmp;
  const Cache c(tmp.path);
  const GroupSpec spec{2, 1, 2, RingMode::Mixed, Flavor::SL};
  const auto G = c.group(spec);
  c.table(spec, G);

  SUBCASE("version mismatch") {
    std::fstream f(c.group_path(spec), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(4);
    f.put(static_cast<char>(kGroupCacheVersion + 1));
    f.close();
    CHECK_FALSE(c.load_group(spec).has_value());
    // A miss recomputes and rewrites.
    CHECK(c.group(spec)->size() == G->size());
    CHECK(c.load_group(spec).has_value());
  }
  SUBCASE("truncation") {
    fs::resize_file(c.table_path(spec), fs::file_size(c.table_path(spec)) / 2);
    CHECK_FALSE(c.load_table(spec, G).has_value());
  }
  SUBCASE("bad magic") {
    std::ofstream(c.group_path(spec), std::ios::binary) << "nope";
    CHECK_FALSE(c.load_group(spec).has_value());
  }
  SUBCASE("file for another key") {
    const GroupSpec other{2, 1, 2, RingMode::Equal, Flavor::SL};
    fs::copy_file(c.group_path(spec), c.group_path(other));
    CHECK_FALSE(c.load_group(other).has_value());
  }
}

TEST_CASE("size bound is enforced before enumeration") {
  const Cache c;
  CHECK_THROWS_AS(c.group(GroupSpec{5, 1, 3, RingMode::Mixed, Flavor::GL}, 10000), SizeBoundExceeded);
}
