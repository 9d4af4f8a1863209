"""Re-derive golden reports and the manifest of the committed fixture corpus."""

from breakscope.corpus.store import refresh

if __name__ == "__main__":
    for entry in refresh():
        s = entry["expectedSummary"]
        print(f"{entry['name']}: {s['breakingChanges']} changes, {s['brokenLocations']} broken, "
              f"{s['impactedClients']}/{s['totalClients']} clients")
