#include "zetalab/count_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

#include "zetalab/error.hpp"

namespace zetalab::counts {

namespace {

class LockedFile {
 public:
  LockedFile(const std::string& path, int flags, int lock) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ < 0) return;
    while (::flock(fd_, lock) != 0 && errno == EINTR) {
    }
  }
  ~LockedFile() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

std::map<unsigned, Int> CountCache::load(const std::string& digest) const {
  std::map<unsigned, Int> out;
  LockedFile file(path_, O_RDONLY, LOCK_SH);
  if (file.fd() < 0) return out;
  std::string content;
  char buf[65536];
  for (;;) {
    ssize_t n = ::read(file.fd(), buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    content.append(buf, static_cast<std::size_t>(n));
  }
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // an unterminated final line is incomplete
    std::istringstream fields(line);
    std::string d, m, count, extra;
    if (!(fields >> d >> m >> count) || (fields >> extra)) continue;
    if (d != digest || !all_digits(m) || !all_digits(count) || m.size() > 9) continue;
    out.emplace(static_cast<unsigned>(std::stoul(m)), Int(count));
  }
  return out;
}

std::optional<Int> CountCache::lookup(const std::string& digest, unsigned m) const {
  auto all = load(digest);
  auto it = all.find(m);
  if (it == all.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(const std::string& digest, unsigned m, const Int& count) const {
  LockedFile file(path_, O_WRONLY | O_APPEND | O_CREAT, LOCK_EX);
  if (file.fd() < 0) throw Error(ErrorCode::Io, "cannot open count cache " + path_ + ": " + std::strerror(errno));
  const std::string line = digest + " " + std::to_string(m) + " " + count.get_str() + "\n";
  std::size_t done = 0;
  while (done < line.size()) {
    ssize_t n = ::write(file.fd(), line.data() + done, line.size() - done);
    if (n < 0 && errno == EINTR) continue;
    if (n < 0) throw Error(ErrorCode::Io, "write to count cache " + path_ + " failed");
    done += static_cast<std::size_t>(n);
  }
}

}  // namespace zetalab::counts
