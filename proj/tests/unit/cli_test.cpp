#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun run(const std::string& args) {
  const std::string command = std::string(MSLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) result.out += buffer.data();
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!result.out.empty() && result.out.back() == '\n') result.out.pop_back();
  return result;
}

void expect_json(const std::string& args, const std::string& expected) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  EXPECT_EQ(r.out, expected) << args;
}

TEST(Cli, DocumentedExamples) {
  expect_json(R"(member --op mono:c=1,alpha=1,lambda=1,d=0 --poly "t-2")", R"({"member":true,"witness":"-t"})");
  expect_json(R"(lzero --op mono:c=1,alpha=0,lambda=1,d=1 --poly "t^4")", R"({"value":"3"})");
  expect_json(R"(mathieu --space '{"modulus":[["t",1],["t - 1",1]],"vbar_basis":[[1,0]]}')",
              R"({"status":"NOT_MATHIEU","witness_a":"1","witness_b":"t"})");
  // [[1,1]] spans 1 + t, i.e. V = {f : f(1) = 2 f(0)}, which is Mathieu.
  expect_json(R"(mathieu --space '{"modulus":[["t",1],["t - 1",1]],"vbar_basis":[[1,1]]}')",
              R"({"status":"MATHIEU_EXACT","witness_a":null,"witness_b":null})");
}

TEST(Cli, EverySubcommand) {
  expect_json(R"(reduce --op mono:c=1,alpha=0,lambda=1,d=1 --poly "t^3")",
              R"({"admissible":true,"normal_form":"2*t","witness":"-t^2"})");
  expect_json(R"(escape --op mono:c=1,alpha=1,lambda=1,d=0 --poly "t - 2")", R"({"escape":2})");
  expect_json(R"(moments --weight hermite --n 4)", R"({"moments":["1","0","1/2","0","3/4"]})");
  expect_json(R"(vb-member --weight jacobi:alpha=0,beta=0 --poly "3*t^2 - 1")", R"({"integral":"0","member":true})");
  expect_json(R"(orthopoly --weight jacobi:alpha=0,beta=0 --n 2)", R"({"poly":"t^2 - 1/3"})");
  expect_json(R"(equiv --weight jacobi:alpha=1,beta=0 --op jacobi:alpha=1,beta=0)",
              R"({"asserted":false,"checked":0,"one_in_image":true,"violations":[]})");
  expect_json(R"(largest-ideal --space '{"modulus":[["t",1],["t - 1",1]],"vbar_basis":[[1,-2]]}')",
              R"({"generator":"t^2 - t"})");
  expect_json(R"(radical-probe --op mono:c=1,alpha=-1,lambda=1,d=1 --poly "t^2" --lo 1 --hi 15)",
              R"({"hi":15,"lo":1,"probe":true})");
  expect_json(R"(radical-probe --space '{"modulus":[["t",1],["t - 1",1]],"vbar_basis":[[1,-2]]}' --poly "2*t - 1" --lo 1 --hi 2)",
              R"({"hi":2,"lo":1,"probe":false,"radical":false})");
  expect_json(R"(ufd-member --ctx ufd:a=x^2 --poly "x^2*t - 1")", R"({"member":true,"witness":"-t"})");
  expect_json(R"(ufd-radical --ctx ufd:a=x^2 --poly "x*t")",
              R"({"f":"x^3*t","factorial_map":"x","member":false,"radical":true})");
  expect_json(R"(cor73 --ctx ufd:a=x^2 --poly "x*t" --g t)", R"({"N":2,"bound":4,"d":1,"validated":true})");
  expect_json(R"(lift74 --a x^2 --d x --d x^3)", R"({"b":"x","d_tilde":["1","x^2"],"u":"x"})");
  const CliRun t77 = run("t77 --ctx trunc:k=2,c=1,a=x --deg 2");
  EXPECT_EQ(t77.code, 0);
  EXPECT_NE(t77.out.find(R"("one_witness":"1/2*x*t^2 + t")"), std::string::npos);
  EXPECT_NE(t77.out.find(R"("status":"SURJECTIVE_VERIFIED")"), std::string::npos);
}

TEST(Cli, CertificateRoundTrip) {
  const CliRun cert = run(R"(certify --poly "t + t^2" --d 1 --alpha 0)");
  ASSERT_EQ(cert.code, 0);
  EXPECT_NE(cert.out.find(R"("prime":3)"), std::string::npos);
  expect_json("verify-cert --cert '" + cert.out + "'", R"({"valid":true})");
  std::string tampered = cert.out;
  tampered.replace(tampered.find(R"("prime":3)"), 9, R"("prime":9)");
  const CliRun bad = run("--assert verify-cert --cert '" + tampered + "'");
  EXPECT_EQ(bad.out, R"({"valid":false})");
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(R"(member --op mono:alpha=1 --poly "1")").code, 0);
  EXPECT_EQ(run(R"(member --op mono:alpha=1 --poly "1" --assert)").code, 1);
  EXPECT_EQ(run(R"(--assert member --op mono:alpha=1 --poly "t - 2")").code, 0);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("member --op mono:alpha=1").code, 2);
  EXPECT_EQ(run(R"(member --op mono:alpha=1 --poly "t +* 2")").code, 2);
  EXPECT_EQ(run(R"(member --op sideways --poly "t")").code, 2);
  EXPECT_EQ(run(R"(mathieu --space '{"modulus":')").code, 2);
  EXPECT_EQ(run(R"(moments --weight laguerre:alpha=-3 --n 2)").code, 2);
  EXPECT_EQ(run(R"(member --format yaml --op mono:alpha=1 --poly "t")").code, 2);
}

TEST(Cli, PrettyOutput) {
  const CliRun r = run(R"(member --pretty --op mono:c=1,alpha=1,lambda=1,d=0 --poly "t-2")");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("member: true"), std::string::npos);
  EXPECT_EQ(run(R"(--format pretty lzero --op mono:d=1 --poly "t^4")").out, "value: 3");
}

TEST(Cli, SeedDeterminism) {
  const std::string space = R"('{"modulus":[["t",2],["t - 1",1],["t^2 + 1",1]],"vbar_basis":[[1,0,0,0,0],[0,0,1,0,0]]}')";
  const CliRun a = run("--seed 5 mathieu --details --space " + space);
  const CliRun b = run("--seed 5 --jobs 3 mathieu --details --space " + space);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run("--seed 6 mathieu --space " + space);
  const CliRun d = run("--seed 7 mathieu --space " + space);
  EXPECT_EQ(c.out, d.out);
}

}  // namespace
