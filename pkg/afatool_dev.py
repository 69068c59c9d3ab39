import afalab

if __name__ == "__main__":
    afalab.afatool_main()
