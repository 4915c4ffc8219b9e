#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "privword/count_cache.hpp"
#include "privword/errors.hpp"
#include "privword/table.hpp"

namespace privword {
namespace {

class TempFile {
 public:
  TempFile() {
    path_ = std::filesystem::temp_directory_path() /
            ("privword_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".csv");
    std::filesystem::remove(path_);
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(FormatReal, SeventeenSignificantDigits) {
  EXPECT_EQ(format_real(1.8392867552141612), "1.8392867552141612");
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(INFINITY), "inf");
  EXPECT_EQ(std::stod(format_real(2.0 / 3.0)), 2.0 / 3.0);
}

TEST(Table, CsvAndJsonCarryTheSameFields) {
  Table t({"name", "n", "count", "x", "missing"});
  t.add_row({Cell::text("a,b"), Cell::integer(3), Cell::big(BigInt("123456789012345678901234567890")),
             Cell::real(0.5), Cell::null()});
  t.add_row({Cell::text("say \"hi\""), Cell::integer(-1), Cell::big(0), Cell::real(NAN), Cell::null()});
  EXPECT_THROW(t.add_row({Cell::text("short")}), InvalidArgument);

  std::ostringstream csv;
  t.write_csv(csv);
  const auto rows = read_csv(csv.str());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], t.columns());
  EXPECT_EQ(rows[1], (std::vector<std::string>{"a,b", "3", "123456789012345678901234567890", "0.5", ""}));
  EXPECT_EQ(rows[2][0], "say \"hi\"");

  std::ostringstream js;
  t.write_json(js);
  const auto doc = nlohmann::json::parse(js.str());
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0]["name"], "a,b");
  EXPECT_EQ(doc[0]["n"], 3);
  EXPECT_EQ(doc[0]["count"], "123456789012345678901234567890");
  EXPECT_EQ(doc[0]["x"], 0.5);
  EXPECT_TRUE(doc[0]["missing"].is_null());
  EXPECT_TRUE(doc[1]["x"].is_null());
}

TEST(CountCache, RoundTrip) {
  TempFile tmp;
  CountCache cache(tmp.path());
  EXPECT_FALSE(cache.load(5, 2));
  cache.store({.n = 5, .q = 2, .count = 8, .method = CountMethod::exhaustive, .wall_time = 0.25});
  const auto rec = CountCache(tmp.path()).load(5, 2);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->count, 8);
  EXPECT_EQ(rec->method, CountMethod::exhaustive);
  EXPECT_DOUBLE_EQ(rec->wall_time, 0.25);
  EXPECT_FALSE(cache.load(5, 3));
}

TEST(CountCache, RecordsAreImmutable) {
  TempFile tmp;
  CountCache cache(tmp.path());
  cache.store({.n = 5, .q = 2, .count = 8});
  EXPECT_NO_THROW(cache.store({.n = 5, .q = 2, .count = 8, .wall_time = 9.0}));
  EXPECT_THROW(cache.store({.n = 5, .q = 2, .count = 9}), CacheError);
  std::ifstream in(tmp.path());
  std::string all((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(read_csv(all).size(), 2u);  // header + one record
}

TEST(CountCache, CorruptEntriesAreReportedAndSkipped) {
  TempFile tmp;
  {
    std::ofstream out(tmp.path());
    out << "# n,q,count,method,wall_time\n"
        << "5,2,eight,exhaustive,0.1\n"
        << "6,2,8,sampled,0.1\n"
        << "7,2,999,exhaustive,0.1\n"
        << "garbage\n"
        << "8,2,20,exhaustive,0.5\n";
  }
  CountCache cache(tmp.path());
  EXPECT_FALSE(cache.load(5, 2));
  EXPECT_EQ(cache.warnings().size(), 4u);
  EXPECT_FALSE(cache.load(6, 2));
  EXPECT_FALSE(cache.load(7, 2));
  const auto ok = cache.load(8, 2);
  ASSERT_TRUE(ok);
  EXPECT_EQ(ok->count, 20);
  // A corrupt line does not block storing a good record for that key.
  EXPECT_NO_THROW(cache.store({.n = 5, .q = 2, .count = 8}));
  EXPECT_EQ(cache.load(5, 2)->count, 8);
}

}  // namespace
}  // namespace privword
